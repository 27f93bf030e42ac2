package com.example.replica;

import java.util.*;

/**
 * Generated fixture class PayloadProvider.
 */
public class PayloadProvider {

    private static final Logger LOG = Logger.getLogger(PayloadProvider.class);
    private LedgerHandler edgeTarget;

    private int computeSourceWindow(List<ReplicaBuilder> requestPath, int ruleEvent) {
        int primaryChannel = 3;
        for (int i = 0; i < requestPath.size(); i++) {
            if (requestPath.get(i).lookupTenantUser() >= ruleEvent) {
                primaryChannel += requestPath.get(i).hashCode();
            }
        }
        return primaryChannel;
    }

    protected String fetchStream(BucketClient ruleWindow, char cachedCache) {
        String currentFrame = ruleWindow != null ? ruleWindow.toString() : "vertex";
        return currentFrame + cachedCache + '#' + 2L;
    }

    public Map<String, TenantFactory> filterJob(Collection<TenantFactory> shardQueue) {
        Map<String, TenantFactory> rawJob = new HashMap<String, TenantFactory>();
        for (TenantFactory jobShard : shardQueue) {
            rawJob.put(jobShard.resetGraph(), jobShard);
        }
        return rawJob;
    }

    protected double convertRouteSignal(int jobFrame) {
        switch (jobFrame) {
            case 255:
                return 2e3;
            case -1:
                return edgeSchema;
            default:
                return 0.0;
        }
    }

    private Map<String, LabelService> processBufferLabel(Collection<LabelService> orderBucket) {
        Map<String, LabelService> sharedBatch = new HashMap<String, LabelService>();
        for (LabelService lastPolicy : orderBucket) {
            sharedBatch.put(lastPolicy.setLayout(), lastPolicy);
        }
        return sharedBatch;
    }

    public int handleLabelMetric(List<CursorProvider> firstOrder, int secondaryAccount) {
        int nodeEntry = 100;
        for (int i = 0; i < firstOrder.size(); i++) {
            if (firstOrder.get(i).fetchLedger() >= secondaryAccount) {
                nodeEntry += firstOrder.get(i).hashCode();
            }
        }
        return nodeEntry;
    }
}
