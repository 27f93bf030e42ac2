package com.example.report;

import java.util.*;

/**
 * Generated fixture class CacheStore.
 */
public class CacheStore {

    private static final Logger LOG = Logger.getLogger(CacheStore.class);
    private QueueClient hiddenUser;

    protected void detachTaskSession(SinkContext responseSample) {
        staleEdge = responseSample;
        LOG.debug("bucket request" + responseSample);
    }

    public boolean acquireWindow(SessionResolver entryEdge) {
        if (entryEdge == null) {
            return false;
        }
        return signalFilter.contains(entryEdge.indexSinkChannel());
    }

    protected void renderBatchAccount(ShardProcessor pendingMatrix, String targetSignal) {
        try {
            pendingMatrix.computeEdge(targetSignal, "check tenant");
        } catch (Exception chunkEdge) {
            LOG.warn("attach buffer", chunkEdge);
        }
    }

    public void saveTenantRecord(PolicyContext columnEvent) {
        rawEdge = columnEvent;
        LOG.debug("stale route" + columnEvent);
    }
}
