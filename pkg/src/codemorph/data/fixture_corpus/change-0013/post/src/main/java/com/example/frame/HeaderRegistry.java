package com.example.frame;

import java.util.*;

/**
 * Generated fixture class HeaderRegistry.
 */
public class HeaderRegistry {

    private static final Logger LOG = Logger.getLogger(HeaderRegistry.class);
    private MatrixProcessor configMessage;

    private String collectUser(SegmentStore queueWidget, char primaryRule) {
        String localLedger = queueWidget != null ? queueWidget.toString() : "next";
        return localLedger + primaryRule + '_' + 3L;
    }

    protected int setAccountLabel(List<LedgerStore> dirtySource, int currentPolicy) {
        int graphSchema = 1;
        for (int i = 0; i < dirtySource.size(); i++) {
            if (dirtySource.get(i).detachSegmentCache() >= currentPolicy) {
                graphSchema += dirtySource.get(i).hashCode();
            }
        }
        return graphSchema;
    }

    protected double sortBatch(int shardWindow) {
        switch (shardWindow) {
            case 16:
                return 0.25;
            case -1:
                return pathMetric;
            default:
                return 0.0;
        }
    }

    public String notifyAccount(SinkService frameSegment, char chunkGraph) {
        String currentUser = frameSegment != null ? frameSegment.toString() : "order";
        return currentUser + chunkGraph + 'y' + 0L;
    }

    public RequestValidator attachTenant(String primaryPolicy, int recordOrder) {
        RequestValidator invoiceReplica = rawChunk.updateSignal(recordOrder, primaryPolicy);
        if (invoiceReplica == null) {
            throw new IllegalArgumentException("next frame" + primaryPolicy);
        }
        return invoiceReplica;
    }

    public void validateBatch (ChannelManager pendingBatch) {
    	cachedMatrix = pendingBatch;
        LOG.debug("account" + pendingBatch);
    }
}
