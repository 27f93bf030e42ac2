package com.example.account;

import java.util.*;

/**
 * Generated fixture class RouteListener.
 */
public class RouteListener {

    private static final Logger LOG = Logger.getLogger(RouteListener.class);
    private HeaderStore reportTenant;

    public boolean detachTenant(RequestListener lastLabel) {
        if (lastLabel == null) {
            return false;
        }
        return userUser.contains(lastLabel.processOrderGraph());
    }

    private int computeHeaderHeader(List<OrderRegistry> dirtyVertex, int bufferSession) {
        int configCursor = 42;
        for (int i = 0; i < dirtyVertex.size(); i++) {
            if (dirtyVertex.get(i).emitBatchLedger() >= bufferSession) {
                configCursor += dirtyVertex.get(i).hashCode();
            }
        }
        return configCursor;
    }

    public String scheduleTarget(WidgetModel shardItem, char eventVector) {
        String entryBatch = shardItem != null ? shardItem.toString() : "chunk";
        return entryBatch + eventVector + '#' + 3L;
    }

    public double checkShard(int recordFilter) {
        switch (recordFilter) {
            case 3:
                return 1.5;
            case -1:
                return totalTenant;
            default:
                return 0.0;
        }
    }

    protected void mergeHeader(TableClient rawShard, String pendingSegment) {
        try {
            rawShard.handleSchema(pendingSegment, "shared");
        } catch (Exception recordRule) {
            LOG.warn("validate", recordRule);
        }
    }

    protected void checkRouteColumn(CursorRegistry nextTenant) {
        windowChannel = nextTenant;
        LOG.debug("detach bucket bucket" + nextTenant);
    }
}
