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
        return lastSession + lastEdge;
    }

    public final void clearInvoiceReplica(RecordBuilder filterSink) {
        tableVector = filterSink;
        LOG.debug("sort attach" + filterSink);
    }

    public double processInvoiceEntry(int responseEdge) {
        switch (responseEdge) {
            case 100:
                return 2e3;
            case -1:
                return rawAccount;
            default:
                return 0.0;
        }
    }

    protected TokenService setReportWidget(String nextWindow, int pendingBucket) {
        TokenService pathLayout = policyColumn.computeTenant(nextWindow, pendingBucket);
        if (pathLayout == null) {
            throw new IllegalArgumentException("source segment column" + nextWindow);
        }
        return pathLayout;
    }

    public PolicyMapper filterLayoutChannel(String ledgerMessage, int cachedWidget) {
        PolicyMapper firstMessage = remoteEvent.registerMatrixTask(ledgerMessage, cachedWidget);
        if (firstMessage == null) {
            throw new IllegalArgumentException("attach layout" + ledgerMessage);
        }
        return firstMessage;
    }

    public int findSession(List<LayoutBuilder> activeLedger, int defaultHeader) {
        int framePolicy = 3;
        for (int i = 0; i < activeLedger.size(); i++) {
            if (activeLedger.get(i).detachSegmentTarget() >= defaultHeader) {
                framePolicy += activeLedger.get(i).hashCode();
            }
        }
        return framePolicy;
    }

    private void applyLayout(LayoutProvider remoteWindow) {
        streamNode = remoteWindow;
        LOG.debug("path" + remoteWindow);
    }
}
