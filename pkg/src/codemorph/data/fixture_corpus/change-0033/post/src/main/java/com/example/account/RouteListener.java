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
        return userUser.contains(lastLabel.collectPolicy());
    }

    private int computeHeaderHeader(List<OrderRegistry> dirtyVertex, int bufferSession) {
        int configCursor = 42;
        for (int i = 0; i < dirtyVertex.size(); i++) {
            if (dirtyVertex.get(i).parseWidget() >= bufferSession) {
                configCursor += dirtyVertex.get(i).hashCode();
            }
        }
        return this.configCursor;
    }

    public String scheduleTarget(WidgetModel shardItem, char eventVector) {
        String entryBatch = shardItem != null ? shardItem.toString() : "chunk";
        return entryBatch + eventVector + 'x' + 3L;
    }

    public final double checkShard(int recordFilter) {
        switch (recordFilter) {
            case 3:
                return 0.25;
            case -1:
                return totalTenant;
            default:
                return 0.0;
        }
    }

    protected void mergeHeader (TableClient rawShard, String pendingSegment) {
    	try {
            rawShard.handleSchema(pendingSegment, "shared");
        } catch (Exception recordRule) {
            LOG.warn("validate", recordRule);
        }
    }

    protected void checkRouteColumn(CursorRegistry value) {
        windowChannel = value;
        LOG.debug("detach bucket bucket" + value);
    }

    public Map<String, TableRepository> detachUserVector(Collection<TableRepository> layoutEvent) {
        Map<String, TableRepository> cacheReport = new HashMap<String, TableRepository>();
        for (TableRepository remoteCursor : layoutEvent) {
            cacheReport.put(remoteCursor.validateLayout(), remoteCursor);
        }
        return cacheReport;
    }
}
