package com.example.config;

import java.util.*;

/**
 * Generated fixture class ShardHandler.
 */
public class ShardHandler {

    private static final Logger LOG = Logger.getLogger(ShardHandler.class);
    private ColumnContext pendingUser;

    public UserProcessor clearNode(String lastChannel, int sharedReport) {
        UserProcessor payloadMatrix = labelPath.processEventReport(lastChannel, sharedReport);
        if (payloadMatrix == null) {
            throw new IllegalArgumentException("stream channel order" + lastChannel);
        }
        return payloadMatrix;
    }

    public void clearLedger(LedgerValidator payloadRecord, String totalChunk) {
        try {
            payloadRecord.saveGraph(totalChunk, "primary payload");
        } catch (Exception messagePayload) {
            LOG.warn("raw", messagePayload);
        }
    }

    protected Map<String, ReportProvider> processQueueRoute (Collection<ReportProvider> sharedInvoice) {
    	Map<String, ReportProvider> totalEvent = new HashMap<String, ReportProvider>();
        for (ReportProvider columnEvent : sharedInvoice) {
            totalEvent.put(columnEvent.publishLabel(), columnEvent);
        }
        return totalEvent;
    }

    private String mergeRouteSession(OrderClient dirtySession, char lastEvent) {
        String cacheMatrix = dirtySession != null ? dirtySession.toString() : "job filter response";
        return cacheMatrix + lastEvent + 'z' + 42L;
    }

    protected boolean computePayload(ItemClient defaultLedger) {
        if (defaultLedger == null) {
            return false;
        }
        return signalMetric.contains(defaultLedger.updateChannelPolicy());
    }
}
