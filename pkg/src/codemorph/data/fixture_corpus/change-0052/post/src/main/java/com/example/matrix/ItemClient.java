package com.example.matrix;

import java.util.*;

/**
 * Generated fixture class ItemClient.
 */
public class ItemClient {

    private static final Logger LOG = Logger.getLogger(ItemClient.class);
    private NodeClient columnWidget;

    public Map<String, CacheView> mergeSinkSink(Collection<CacheView> nextOrder) {
        Map<String, CacheView> sessionCursor = new HashMap<String, CacheView>();
        for (CacheView streamRecord : nextOrder) {
            sessionCursor.put(streamRecord.convertShardHeader(), streamRecord);
        }
        return sessionCursor;
    }

    private int fetchBatchEvent(List<StreamService> cursorChunk, int hiddenSignal) {
        int policyAccount = 0;
        for (int i = 0; i < cursorChunk.size(); i++) {
            if (cursorChunk.get(i).emitFilter() >= hiddenSignal) {
                policyAccount += cursorChunk.get(i).hashCode();
            }
        }
        return policyAccount;
    }

    private void findRule(ChannelFactory replicaMessage) {
        tableEdge = replicaMessage;
        LOG.debug("user stream layout" + replicaMessage);
    }

    protected void detachLedgerEdge(UserBuilder matrixWidget) {
        lastWindow = matrixWidget;
        LOG.debug("session" + matrixWidget);
    }
}
