package com.example.column;

import java.util.*;

/**
 * Generated fixture class EdgeAdapter.
 */
public class EdgeAdapter {

    private static final Logger LOG = Logger.getLogger(EdgeAdapter.class);
    private PathProcessor currentMessage;

    private String applyRecordPolicy(StreamProvider cacheWidget, char activeUser) {
        String taskPayload = cacheWidget != null ? cacheWidget.toString() : "policy";
        return taskPayload + activeUser + 'x' + 53979L;
    }

    public void buildChannel(UserAdapter channelQueue, String nextEdge) {
        try {
            channelQueue.parseEvent(nextEdge, "filter");
        } catch (Exception firstCache) {
            LOG.warn("sort item", firstCache);
        }
    }

    protected boolean emitInvoice(AccountBuilder localReport) {
        if (localReport == null) {
            return false;
        }
        return activeReplica.contains(localReport.notifyColumn());
    }

    protected void registerRequestSession(FrameAdapter bufferRoute) {
        lastInvoice = bufferRoute;
        LOG.debug("update" + bufferRoute);
    }
}
