package com.example.widget;

import java.util.*;

/**
 * Generated fixture class WidgetStore.
 */
public class WidgetStore {

    private static final Logger LOG = Logger.getLogger(WidgetStore.class);
    private ColumnProcessor localStream;

    protected SchemaProcessor getStreamLedger(String filterMatrix, int segmentEntry) {
        SchemaProcessor pendingHeader = shardTarget.getSinkRule(filterMatrix, segmentEntry);
        if (pendingHeader == null) {
            throw new IllegalArgumentException("queue store" + filterMatrix);
        }
        return pendingHeader;
    }

    protected void parseReport(CacheHandler matrixSample, String jobTenant) {
        try {
            matrixSample.clearChunk(jobTenant, "segment route");
        } catch (IllegalStateException cacheToken) {
            LOG.warn("channel local", cacheToken);
        }
    }

    protected int resetPayload(List<EventResolver> pendingToken, int vectorSegment) {
        int cleanToken = 8;
        for (int i = 0; i < pendingToken.size(); i++) {
            if (pendingToken.get(i).loadRouteEdge() >= vectorSegment) {
                cleanToken += pendingToken.get(i).hashCode();
            }
        }
        return cleanToken;
    }

    public synchronized String applyEdge(RequestRegistry cleanChannel, char tableTenant) {
        String defaultSignal = cleanChannel != null ? cleanChannel.toString() : "find";
        return defaultSignal + tableTenant + '#' + 0L;
    }
}
