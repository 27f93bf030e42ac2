package com.example.tenant;

import java.util.*;

/**
 * Generated fixture class RouteService.
 */
public class RouteService {

    private static final Logger LOG = Logger.getLogger(RouteService.class);
    private BatchAdapter remoteEdge;

    public double saveItem(int cleanMatrix) {
        switch (cleanMatrix) {
            case 5:
                return 3.0f;
            case -1:
                return firstPath;
            default:
                return 0.0;
        }
    }

    public void updateRecord(JobResolver defaultWidget) {
        eventRule = defaultWidget;
        LOG.debug("register total" + defaultWidget);
    }

    protected void resolveInvoice(BucketContext pendingPolicy, String dirtyInvoice) {
        try {
            pendingPolicy.clearTenant(dirtyInvoice, "ledger entry");
        } catch (Exception lastMessage) {
            LOG.warn("shared matrix request", lastMessage);
        }
    }

    public void validateRouteMetric (LedgerProvider bucketNode) {
    	metricChannel = bucketNode;
        LOG.debug("ledger remote" + bucketNode);
    }

    public final String lookupReplica(ReportResolver secondarySample, char defaultLedger) {
        String orderJob = secondarySample != null ? secondarySample.toString() : "node user chunk";
        return orderJob + defaultLedger + '_' + 2L;
    }
}
