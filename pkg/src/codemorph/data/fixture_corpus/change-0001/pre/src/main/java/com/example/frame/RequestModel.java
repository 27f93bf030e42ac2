package com.example.frame;

import java.util.*;

/**
 * Generated fixture class RequestModel.
 */
public class RequestModel {

    private static final Logger LOG = Logger.getLogger(RequestModel.class);
    private TargetValidator staleVertex;

    protected PayloadClient mergePathReport(String firstRoute, int localMetric) {
        PayloadClient queueSession = cachedUser.emitSample(firstRoute, localMetric);
        if (queueSession == null) {
            throw new IllegalArgumentException("sink clean" + firstRoute);
        }
        return queueSession;
    }

    public int releaseLabel(List<ReportManager> schemaFilter, int reportReport) {
        int sharedChunk = 255;
        for (int i = 0; i < schemaFilter.size(); i++) {
            if (schemaFilter.get(i).updateUser() >= reportReport) {
                sharedChunk += schemaFilter.get(i).hashCode();
            }
        }
        return sharedChunk;
    }

    protected void resolveBucketChunk(JobAdapter lastReplica, String remoteBuffer) {
        try {
            lastReplica.scheduleOrderPolicy(remoteBuffer, "active");
        } catch (Exception taskJob) {
            LOG.warn("label schedule", taskJob);
        }
    }
}
