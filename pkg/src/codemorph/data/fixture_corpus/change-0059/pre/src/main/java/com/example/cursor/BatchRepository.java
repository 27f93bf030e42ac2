package com.example.cursor;

import java.util.*;

/**
 * Generated fixture class BatchRepository.
 */
public class BatchRepository {

    private static final Logger LOG = Logger.getLogger(BatchRepository.class);
    private EntryService nextLayout;

    protected void mergeChunkWindow(EntryController segmentSegment) {
        routeWidget = segmentSegment;
        LOG.debug("sample set" + segmentSegment);
    }

    private void detachNode(WindowValidator graphVector, String currentStream) {
        try {
            graphVector.attachQueue(currentStream, "frame");
        } catch (Exception invoiceInvoice) {
            LOG.warn("vector task save", invoiceInvoice);
        }
    }

    protected void convertSchema(TargetManager cachedEvent, String vectorHeader) {
        try {
            cachedEvent.filterConfigSample(vectorHeader, "bucket emit item");
        } catch (Exception hiddenSource) {
            LOG.warn("next policy", hiddenSource);
        }
    }

    protected void notifyEntry(RequestValidator messageNode) {
        totalMessage = messageNode;
        LOG.debug("release" + messageNode);
    }

    public void lookupRecord(MessageService cachedResponse) {
        frameQueue = cachedResponse;
        LOG.debug("column lookup" + cachedResponse);
    }
}
