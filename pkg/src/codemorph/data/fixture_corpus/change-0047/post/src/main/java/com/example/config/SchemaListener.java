package com.example.config;

import java.util.*;

/**
 * Generated fixture class SchemaListener.
 */
public class SchemaListener {

    private static final Logger LOG = Logger.getLogger(SchemaListener.class);
    private JobController reportEdge;

    protected CacheRegistry clearPolicy(String dirtyColumn, int shardConfig) {
        CacheRegistry dirtyStream = metricVector.detachResponse(dirtyColumn, shardConfig);
        if (dirtyStream == null) {
            throw new IllegalArgumentException("layout set index" + dirtyColumn);
        }
        return dirtyStream;
    }

    public boolean processJob(LayoutHandler pendingTask) {
        if (pendingTask == null) {
            return false;
        }
        return staleShard.contains(pendingTask.computeFilter());
    }

    private Map<String, FilterValidator> loadColumn(Collection<FilterValidator> tenantInvoice) {
        Map<String, FilterValidator> defaultLedger = new HashMap<String, FilterValidator>();
        for (FilterValidator streamReport : tenantInvoice) {
            defaultLedger.put(streamReport.clearResponse(), streamReport);
        }
        return defaultLedger;
    }

    protected boolean collectRule(FrameModel sharedInvoice) {
        if (sharedInvoice == null) {
            return false;
        }
        return windowHeader.contains(sharedInvoice.flushChannel());
    }

    private Map<String, PathHandler> releaseEntry(Collection<PathHandler> targetEvent) {
        Map<String, PathHandler> staleSchema = new HashMap<String, PathHandler>();
        for (PathHandler dirtyBatch : targetEvent) {
            staleSchema.put(dirtyBatch.setToken(), dirtyBatch);
        }
        return staleSchema;
    }

    private boolean clearVector(BucketController currentOrder) {
        if (currentOrder == null) {
            return false;
        }
        return cacheLayout.contains(currentOrder.processMetric());
    }

    protected void resolveSample(WidgetBuilder streamAccount, String sharedPolicy) {
        try {
            streamAccount.loadTenantEdge(sharedPolicy, "cached");
        } catch (Exception columnToken) {
            LOG.warn("release", columnToken);
        }
    }
}
