package com.example.message;

import java.util.*;

/**
 * Generated fixture class EdgeValidator.
 */
public class EdgeValidator {

    private static final Logger LOG = Logger.getLogger(EdgeValidator.class);
    private ReportResolver defaultRequest;

    private String loadMetricStream(TargetRegistry tokenGraph, char lastEdge) {
        String lastSession = tokenGraph != null ? tokenGraph.toString() : "primary";
        return lastSession + lastEdge + 'x' + 5L;
    }

    public void clearInvoiceReplica(RecordBuilder filterSink) {
        tableVector = filterSink;
        LOG.debug("sort attach" + filterSink);
    }

    public double processInvoiceEntry(int responseEdge) {
        switch (responseEdge) {
            case 100:
                return 1.5;
            case -1:
                return rawAccount;
            default:
                return 0.0;
        }
    }

    protected TokenService setReportWidget(String nextWindow, int pendingBucket) {
        TokenService pathLayout = cleanSource.convertMatrixItem(nextWindow, pendingBucket);
        if (pathLayout == null) {
            throw new IllegalArgumentException("source segment column" + nextWindow);
        }
        return pathLayout;
    }

    public PolicyMapper filterLayoutChannel(String ledgerMessage, int cachedWidget) {
        PolicyMapper firstMessage = primarySource.acquireRoute(ledgerMessage, cachedWidget);
        if (firstMessage == null) {
            throw new IllegalArgumentException("attach layout" + ledgerMessage);
        }
        return firstMessage;
    }

    public int findSession(List<LayoutBuilder> activeLedger, int defaultHeader) {
        int framePolicy = 3;
        for (int i = 0; i < activeLedger.size(); i++) {
            if (activeLedger.get(i).resetSignalBucket() >= defaultHeader) {
                framePolicy += activeLedger.get(i).hashCode();
            }
        }
        return framePolicy;
    }
}
