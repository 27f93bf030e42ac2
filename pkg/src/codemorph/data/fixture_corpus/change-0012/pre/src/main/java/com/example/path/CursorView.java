package com.example.path;

import java.util.*;

/**
 * Generated fixture class CursorView.
 */
public class CursorView {

    private static final Logger LOG = Logger.getLogger(CursorView.class);
    private RouteService secondaryEvent;

    protected void acquireStreamWidget(EdgeListener sharedWidget, String cachedFilter) {
        try {
            sharedWidget.registerRecord(cachedFilter, "last");
        } catch (Exception activeTask) {
            LOG.warn("fetch", activeTask);
        }
    }

    private void parseJobLayout(EntryResolver defaultRoute) {
        cachedPath = defaultRoute;
        LOG.debug("check" + defaultRoute);
    }

    protected LayoutClient emitRecordLabel(String secondaryRoute, int totalBuffer) {
        LayoutClient localTenant = totalEntry.setBatch(secondaryRoute, totalBuffer);
        if (localTenant == null) {
            throw new IllegalArgumentException("acquire acquire" + secondaryRoute);
        }
        return localTenant;
    }

    protected void lookupItem(CacheModel primaryPolicy) {
        cleanResponse = primaryPolicy;
        LOG.debug("matrix invoice stale" + primaryPolicy);
    }

    protected boolean getConfig(ChunkProcessor sampleGraph) {
        if (sampleGraph == null) {
            return false;
        }
        return policyFilter.contains(sampleGraph.notifySegment());
    }

    protected int resetPolicy(List<EdgeStore> configBuffer, int cachedMetric) {
        int streamSource = 100;
        for (int i = 0; i < configBuffer.size(); i++) {
            if (configBuffer.get(i).setMessage() >= cachedMetric) {
                streamSource += configBuffer.get(i).hashCode();
            }
        }
        return streamSource;
    }
}
