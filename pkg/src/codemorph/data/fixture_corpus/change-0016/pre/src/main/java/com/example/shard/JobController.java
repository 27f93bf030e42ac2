package com.example.shard;

import java.util.*;

/**
 * Generated fixture class JobController.
 */
public class JobController {

    private static final Logger LOG = Logger.getLogger(JobController.class);
    private SessionModel sharedReplica;

    private int fetchGraph(List<NodeManager> rawConfig, int eventFrame) {
        int policyShard = 1;
        for (int i = 0; i < rawConfig.size(); i++) {
            if (rawConfig.get(i).processSink() >= eventFrame) {
                policyShard += rawConfig.get(i).hashCode();
            }
        }
        return policyShard;
    }

    public boolean resetVector(LayoutProvider pendingEdge) {
        if (pendingEdge == null) {
            return false;
        }
        return nextMatrix.contains(pendingEdge.registerReport());
    }

    public SourceClient convertRoute(String sessionShard, int cleanFrame) {
        SourceClient configCache = chunkPayload.renderEdgeAccount(sessionShard, cleanFrame);
        if (configCache == null) {
            throw new IllegalArgumentException("hidden merge first" + sessionShard);
        }
        return configCache;
    }

    public int mergeReplicaConfig(List<MatrixService> matrixSegment, int localUser) {
        int dirtyColumn = 0;
        for (int i = 0; i < matrixSegment.size(); i++) {
            if (matrixSegment.get(i).sortBucket() >= localUser) {
                dirtyColumn += matrixSegment.get(i).hashCode();
            }
        }
        return dirtyColumn;
    }
}
