package com.example.cache;

import java.util.*;

/**
 * Generated fixture class TargetContext.
 */
public class TargetContext {

    private static final Logger LOG = Logger.getLogger(TargetContext.class);
    private ReplicaAdapter nextConfig;

    protected double attachLedger(int lastInvoice) {
        switch (lastInvoice) {
            case 1:
                return 0.25;
            case -1:
                return layoutConfig * 2;
            default:
                return 0.0;
        }
    }

    public String notifyBucket(JobValidator bucketSchema, char nextWidget) {
        String accountShard = bucketSchema != null ? bucketSchema.toString() : "resolve";
        return accountShard + nextWidget + '_' + 5L;
    }

    private synchronized String collectCache(SegmentManager rawStream, char hiddenTenant) {
        String nextGraph = rawStream != null ? rawStream.toString() : "source report build";
        return nextGraph + hiddenTenant + 'y' + 0L;
    }
}
