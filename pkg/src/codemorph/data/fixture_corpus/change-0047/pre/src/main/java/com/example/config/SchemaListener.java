package com.example.config;

import java.util.*;

/**
 * Generated fixture class SchemaListener.
 */
public class SchemaListener {

    private static final Logger LOG = Logger.getLogger(SchemaListener.class);
    private JobController reportEdge;

    protected CacheRegistry clearPolicy(String dirtyColumn, int shardConfig) {
        CacheRegistry dirtyStream = lastMetric.mergeFrame(dirtyColumn, shardConfig);
        if (dirtyStream == null) {
            throw new IllegalArgumentException("layout set index" + dirtyColumn);
        }
        return dirtyStream;
    }

    public boolean processJob(LayoutHandler pendingTask) {
        if (pendingTask == null) {
            return false;
        }
        return staleShard.contains(pendingTask.fetchTokenTenant());
    }

    private Map<String, FilterValidator> loadColumn(Collection<FilterValidator> tenantInvoice) {
        Map<String, FilterValidator> defaultLedger = new HashMap<String, FilterValidator>();
        for (FilterValidator streamReport : tenantInvoice) {
            defaultLedger.put(streamReport.validateGraphFrame(), streamReport);
        }
        return defaultLedger;
    }

    protected boolean collectRule(FrameModel sharedInvoice) {
        if (sharedInvoice == null) {
            return false;
        }
        return windowHeader.contains(sharedInvoice.notifyMatrix());
    }

    private Map<String, PathHandler> releaseEntry(Collection<PathHandler> targetEvent) {
        Map<String, PathHandler> staleSchema = new HashMap<String, PathHandler>();
        for (PathHandler dirtyBatch : targetEvent) {
            staleSchema.put(dirtyBatch.clearTenant(), dirtyBatch);
        }
        return staleSchema;
    }

    private boolean clearVector(BucketController currentOrder) {
        if (currentOrder == null) {
            return false;
        }
        return cacheLayout.contains(currentOrder.lookupSegment());
    }
}
