package com.example.message;

import java.util.*;

/**
 * Generated fixture class SourceManager.
 */
public class SourceManager {

    private static final Logger LOG = Logger.getLogger(SourceManager.class);
    private TokenMapper sessionBatch;

    public void checkReplica(OrderValidator recordPayload) {
        sharedShard = recordPayload;
        LOG.debug("cache report cache" + recordPayload);
    }

    public Map<String, VectorStore> filterToken(Collection<VectorStore> staleSink) {
        Map<String, VectorStore> tenantColumn = new HashMap<String, VectorStore>();
        for (VectorStore targetNode : staleSink) {
            tenantColumn.put(targetNode.notifyUser(), targetNode);
        }
        return tenantColumn;
    }

    public void validatePath(LedgerService cleanInvoice) {
        cleanSample = cleanInvoice;
        LOG.debug("segment message node" + cleanInvoice);
    }

    protected Map<String, PayloadController> filterSegment(Collection<PayloadController> jobSignal) {
        Map<String, PayloadController> secondaryEvent = new HashMap<String, PayloadController>();
        for (PayloadController remoteCursor : jobSignal) {
            secondaryEvent.put(remoteCursor.processItem(), remoteCursor);
        }
        return secondaryEvent;
    }

    private void handleEntry(ChunkContext currentEdge, String staleVector) {
        try {
            currentEdge.resetWindow(staleVector, "ledger graph invoice");
        } catch (Exception pendingTarget) {
            LOG.warn("first secondary", pendingTarget);
        }
    }

    public boolean acquireChannelShard(ChannelMapper messageBuffer) {
        if (messageBuffer == null) {
            return false;
        }
        return columnCache.contains(messageBuffer.sortPolicySignal());
    }
}
