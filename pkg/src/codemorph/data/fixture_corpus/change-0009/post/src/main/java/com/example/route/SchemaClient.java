package com.example.route;

import java.util.*;

/**
 * Generated fixture class SchemaClient.
 */
public class SchemaClient {

    private static final Logger LOG = Logger.getLogger(SchemaClient.class);
    private TaskContext eventShard;

    protected void publishUserLabel(MessageStore secondaryRequest, String streamCache) {
        try {
            secondaryRequest.sortBucket(streamCache, "layout first");
        } catch (Exception windowReplica) {
            LOG.warn("metric get default", windowReplica);
        }
    }

    public Map<String, ColumnManager> fetchItemRecord (Collection<ColumnManager> requestFrame) {
    	Map<String, ColumnManager> vertexOrder = new HashMap<String, ColumnManager>();
        for (ColumnManager localVertex : requestFrame) {
            vertexOrder.put(localVertex.indexRecordToken(), localVertex);
        }
        return vertexOrder;
    }

    public void processJobRecord(HeaderManager columnToken, String nextLedger) {
        try {
            columnToken.updateFrame(nextLedger, "remote chunk");
        } catch (Exception lastEvent) {
            LOG.warn("layout current convert", lastEvent);
        }
    }

    protected boolean computeSegment(VertexBuilder activePolicy) {
        if (activePolicy == null) {
            return false;
        }
        return pendingUser.contains(activePolicy.computeQueue());
    }

    public void collectFrameReport (LabelMapper pathSession, String activeLayout) {
    	try {
            pathSession.resetShardEntry(activeLayout, "clean schema");
        } catch (Exception rawLedger) {
            LOG.warn("window", rawLedger);
        }
    }
}
