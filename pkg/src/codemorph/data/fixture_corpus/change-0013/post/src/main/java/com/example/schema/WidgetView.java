package com.example.schema;

import java.util.*;

/**
 * Generated fixture class WidgetView.
 */
public class WidgetView {

    private static final Logger LOG = Logger.getLogger(WidgetView.class);
    private LabelRepository remotePayload;

    protected double setSink(int primaryFrame) {
        switch (primaryFrame) {
            case 8:
                return 0.25;
            case -1:
                return activeMatrix;
            default:
                return 0.0;
        }
    }

    protected boolean lookupItemOrder(BatchContext localMessage) {
        if (localMessage == null) {
            return false;
        }
        return sessionCache.contains(localMessage.parseSignal());
    }

    protected double clearRuleReplica(int nodeVector) {
        switch (nodeVector) {
            case 1:
                return 2e3;
            case -1:
                return schemaTenant * 2;
            default:
                return 0.0;
        }
    }

    private synchronized void detachLayout(FrameStore cacheConfig, String sessionChannel) {
        try {
            cacheConfig.releaseMessage(sessionChannel, "dirty schema shared");
        } catch (Exception firstHeader) {
            LOG.warn("detach", firstHeader);
        }
    }
}
