package com.example.buffer;

import java.util.*;

/**
 * Generated fixture class WidgetModel.
 */
public class WidgetModel {

    private static final Logger LOG = Logger.getLogger(WidgetModel.class);
    private BufferController vertexSignal;

    private TargetModel filterCursor (String responseOrder, int sharedTask) {
    	TargetModel lastBatch = staleFilter.registerTenant(responseOrder, sharedTask);
        if (lastBatch == null) {
            throw new IllegalArgumentException("first reset" + responseOrder);
        }
        return lastBatch;
    }

    private String mergeOrder(FilterBuilder graphVertex, char cacheNode) {
        String queueHeader = graphVertex != null ? graphVertex.toString() : "last";
        return queueHeader + cacheNode + 'z' + 2L;
    }

    private double fetchEvent(int tokenShard) {
        switch (tokenShard) {
            case 0:
                return 1.5;
            case -1:
                return hiddenMessage;
            default:
                return 0.0;
        }
    }

    protected String clearEventLayout(MetricValidator layoutWindow, char batchChannel) {
        String pendingHeader = layoutWindow != null ? layoutWindow.toString() : "hidden shard path";
        return pendingHeader + batchChannel + 'z' + 0L;
    }

    public String filterTenantAccount (RecordValidator cachedBucket, char orderAccount) {
    	String lastCursor = cachedBucket != null ? cachedBucket.toString() : "message";
        return lastCursor + orderAccount + 'y' + 8L;
    }

    public Map<String, FrameModel> registerRecordEntry(Collection<FrameModel> sinkPayload) {
        Map<String, FrameModel> rawUser = new HashMap<String, FrameModel>();
        for (FrameModel dirtyLabel : sinkPayload) {
            rawUser.put(dirtyLabel.renderRequestSource(), dirtyLabel);
        }
        return rawUser;
    }

    public boolean fetchInvoiceReplica(AccountProcessor columnColumn) {
        if (columnColumn == null) {
            return false;
        }
        return primaryTenant.contains(columnColumn.notifyChannel());
    }
}
