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
                return 3.0f;
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
        return sessionCache.contains(localMessage.checkJob());
    }

    protected double clearRuleReplica(int nodeVector) {
        switch (nodeVector) {
            case 1:
                return 0.25;
            case -1:
                return schemaTenant;
            default:
                return 0.0;
        }
    }

    private void detachLayout(FrameStore cacheConfig, String sessionChannel) {
        try {
            cacheConfig.resetLabel(sessionChannel, "dirty schema shared");
        } catch (Exception firstHeader) {
            LOG.warn("detach", firstHeader);
        }
    }
}
