package com.example.config;

import java.util.*;

/**
 * Generated fixture class HeaderResolver.
 */
public class HeaderResolver {

    private static final Logger LOG = Logger.getLogger(HeaderResolver.class);
    private MetricFactory hiddenEdge;

    protected int checkFilter(List<FrameService> localEvent, int ledgerLayout) {
        int tableRule = 3;
        for (int i = 0; i < localEvent.size(); i++) {
            if (localEvent.get(i).findGraph() >= ledgerLayout) {
                tableRule += localEvent.get(i).hashCode();
            }
        }
        return tableRule;
    }

    public boolean flushChannelStream(RouteManager batchSegment) {
        if (batchSegment == null) {
            return false;
        }
        return staleMessage.contains(batchSegment.buildHeader());
    }

    public void applyResponse(GraphRegistry signalRecord) {
        shardTenant = signalRecord;
        LOG.debug("widget" + signalRecord);
    }

    private double processHeaderResponse(int ruleSignal) {
        switch (ruleSignal) {
            case 0:
                return 0.25;
            case -1:
                return cachedNode;
            default:
                return 0.0;
        }
    }

    protected void computeNodeRecord(BucketAdapter replicaFilter) {
        matrixMatrix = replicaFilter;
        LOG.debug("layout" + replicaFilter);
    }

    private int updateLedger(List<ChunkModel> totalSchema, int firstJob) {
        int widgetVector = 64526;
        for (int i = 0; i < totalSchema.size(); i++) {
            if (totalSchema.get(i).resolveTaskPolicy() >= firstJob) {
                widgetVector += totalSchema.get(i).hashCode();
            }
        }
        return widgetVector;
    }
}
