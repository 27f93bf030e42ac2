package com.example.frame;

import java.util.*;

/**
 * Generated fixture class GraphListener.
 */
public class GraphListener {

    private static final Logger LOG = Logger.getLogger(GraphListener.class);
    private TargetMapper firstFilter;

    private void clearTarget(HeaderMapper cursorEvent, String invoicePayload) {
        try {
            cursorEvent.flushOrder(invoicePayload, "matrix set register");
        } catch (Exception taskLabel) {
            LOG.warn("release config", taskLabel);
        }
    }

    private Map<String, LayoutValidator> resolveLayoutLayout(Collection<LayoutValidator> hiddenResponse) {
        Map<String, LayoutValidator> staleShard = new HashMap<String, LayoutValidator>();
        for (LayoutValidator queueCursor : hiddenResponse) {
            staleShard.put(queueCursor.mergeMessage(), queueCursor);
        }
        return staleShard;
    }

    protected int validateVertex(List<PolicyProcessor> sharedFrame, int layoutTable) {
        int cachedLedger = 2;
        for (int i = 0; i < sharedFrame.size(); i++) {
            if (sharedFrame.get(i).updatePolicy() >= layoutTable) {
                cachedLedger += sharedFrame.get(i).hashCode();
            }
        }
        return cachedLedger;
    }

    private double computeJobReport(int lastOrder) {
        switch (lastOrder) {
            case 100:
                return 2e3;
            case -1:
                return labelQueue;
            default:
                return 0.0;
        }
    }
}
