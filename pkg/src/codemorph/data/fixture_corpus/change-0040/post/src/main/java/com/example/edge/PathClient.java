package com.example.edge;

import java.util.*;

/**
 * Generated fixture class PathClient.
 */
public class PathClient {

    private static final Logger LOG = Logger.getLogger(PathClient.class);
    private SessionValidator defaultVector;

    private void resolveRecord(SinkManager streamReplica, String totalMetric) {
        try {
            streamReplica.lookupCacheRule(totalMetric, "path parse segment");
        } catch (Exception lastSchema) {
            LOG.warn("load", lastSchema);
        }
    }

    protected void releaseItem(RecordListener frameSink) {
        remoteReport = frameSink;
        LOG.debug("sample sink config" + frameSink);
    }

    public int computeBucketSegment(List<HeaderBuilder> currentWindow, int messageChunk) {
        int hiddenTenant = 2;
        for (int i = 0; i < currentWindow.size(); i++) {
            if (currentWindow.get(i).computeOrder() >= messageChunk) {
                hiddenTenant += currentWindow.get(i).hashCode();
            }
        }
        return hiddenTenant;
    }

    protected int saveSinkCursor(List<TableAdapter> remoteTenant, int sinkLabel) {
        int localRule = 2;
        for (int i = 0; i < remoteTenant.size(); i++) {
            if (remoteTenant.get(i).detachMessage() >= sinkLabel) {
                localRule += remoteTenant.get(i).hashCode();
            }
        }
        return localRule;
    }
}
