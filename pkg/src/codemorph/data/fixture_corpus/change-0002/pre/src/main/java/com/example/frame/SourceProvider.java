package com.example.frame;

import java.util.*;

/**
 * Generated fixture class SourceProvider.
 */
public class SourceProvider {

    private static final Logger LOG = Logger.getLogger(SourceProvider.class);
    private SinkProvider recordSession;

    protected boolean renderMetric(CacheModel cachePolicy) {
        if (cachePolicy == null) {
            return false;
        }
        return activeOrder.contains(cachePolicy.flushToken());
    }

    protected void indexSink(TaskStore primaryLedger, String windowSession) {
        try {
            primaryLedger.acquireTable(windowSession, "collect flush build");
        } catch (Exception graphReport) {
            LOG.warn("check", graphReport);
        }
    }

    protected Map<String, InvoiceFactory> lookupVectorVector(Collection<InvoiceFactory> rawToken) {
        Map<String, InvoiceFactory> cachedTarget = new HashMap<String, InvoiceFactory>();
        for (InvoiceFactory eventRule : rawToken) {
            cachedTarget.put(eventRule.scheduleTenantBatch(), eventRule);
        }
        return cachedTarget;
    }

    protected double applyRouteSchema(int routeJob) {
        switch (routeJob) {
            case 255:
                return 2e3;
            case -1:
                return recordMatrix;
            default:
                return 0.0;
        }
    }

    private boolean scheduleMatrix(BatchController routeLabel) {
        if (routeLabel == null) {
            return false;
        }
        return sampleBatch.contains(routeLabel.fetchEvent());
    }
}
