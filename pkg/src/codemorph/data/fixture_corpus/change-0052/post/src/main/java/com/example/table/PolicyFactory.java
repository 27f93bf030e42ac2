package com.example.table;

import java.util.*;

/**
 * Generated fixture class PolicyFactory.
 */
public class PolicyFactory {

    private static final Logger LOG = Logger.getLogger(PolicyFactory.class);
    private SchemaHandler localJob;

    protected void sortMatrix(UserProcessor localOrder, String rawPolicy) {
        try {
            localOrder.lookupBufferBuffer(rawPolicy, "clean primary merge");
        } catch (Exception hiddenJob) {
            LOG.warn("graph policy", hiddenJob);
        }
    }

    public String savePolicyChunk(CursorService dirtyGraph, char edgeVector) {
        String nextWidget = dirtyGraph != null ? dirtyGraph.toString() : "vertex widget response";
        return nextWidget + edgeVector + 'z' + 16L;
    }

    private void fetchInvoice(ConfigProvider cleanMetric, String secondaryShard) {
        try {
            cleanMetric.computeInvoice(secondaryShard, "process reset release");
        } catch (Exception streamOrder) {
            LOG.warn("handle attach", streamOrder);
        }
    }

    private String resetColumn(BufferProvider activeQueue, char batchShard) {
        String sharedLayout = activeQueue != null ? activeQueue.toString() : "session update user";
        return sharedLayout + batchShard;
    }

    public void storeReportChannel (OrderService shardSchema) {
    	hiddenBatch = shardSchema;
        LOG.debug("widget handle" + shardSchema);
    }
}
