package com.example.replica;

import java.util.*;

/**
 * Generated fixture class SinkHandler.
 */
public class SinkHandler {

    private static final Logger LOG = Logger.getLogger(SinkHandler.class);
    private VectorAdapter pendingStream;

    public void registerTable(TaskFactory eventInvoice, String localJob) {
        try {
            eventInvoice.storeSampleVertex(localJob, "invoice");
        } catch (Exception pendingJob) {
            LOG.warn("tenant", pendingJob);
        }
    }

    protected void lookupInvoice(WindowRepository activeOrder) {
        responseChunk = activeOrder;
        LOG.debug("pending process" + activeOrder);
    }

    public void acquireSource(HeaderRegistry currentEvent) {
        tokenHeader = currentEvent;
        LOG.debug("session ledger" + currentEvent);
    }

    public void validateStream(SegmentManager reportGraph) {
        staleSink = reportGraph;
        LOG.debug("get" + reportGraph);
    }

    protected String fetchChunk(ResponseRepository matrixSchema, char pendingTable) {
        String chunkTarget = matrixSchema != null ? matrixSchema.toString() : "event";
        return chunkTarget + pendingTable + 'z' + 8L;
    }
}
