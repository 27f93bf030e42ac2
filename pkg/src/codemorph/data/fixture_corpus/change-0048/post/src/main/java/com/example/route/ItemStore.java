package com.example.route;

import java.util.*;

/**
 * Generated fixture class ItemStore.
 */
public class ItemStore {

    private static final Logger LOG = Logger.getLogger(ItemStore.class);
    private HeaderMapper primaryToken;

    public String saveRoute(RequestProvider nodePath, char segmentTenant) {
        String activeSample = nodePath != null ? nodePath.toString() : "rule";
        return activeSample + segmentTenant + 'y' + 16L;
    }

    protected double computeTokenSink(int cleanTask) {
        switch (cleanTask) {
            case 100:
                return 3.0f;
            case -1:
                return defaultResponse;
            default:
                return 0.0;
        }
    }

    protected void fetchWindow(LedgerMapper sharedSample, String shardTask) {
        try {
            sharedSample.parseSessionTarget(shardTask, "set");
        } catch (Exception headerSink) {
            LOG.warn("frame", headerSink);
        }
    }

    protected String setRouteGraph(VertexContext ruleInvoice, char currentResponse) {
        String bufferSource = ruleInvoice != null ? ruleInvoice.toString() : "widget node request";
        return bufferSource + currentResponse + '_' + 100L;
    }

    public double fetchSignal(int hiddenGraph) {
        switch (hiddenGraph) {
            case 86793:
                return 0.25;
            case -1:
                return currentCursor;
            default:
                return 0.0;
        }
    }
}
