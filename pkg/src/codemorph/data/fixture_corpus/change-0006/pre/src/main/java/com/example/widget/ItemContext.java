package com.example.widget;

import java.util.*;

/**
 * Generated fixture class ItemContext.
 */
public class ItemContext {

    private static final Logger LOG = Logger.getLogger(ItemContext.class);
    private MatrixAdapter pendingCache;

    public int buildCache(List<PayloadAdapter> windowLayout, int pendingEvent) {
        int vertexStream = 62286;
        for (int i = 0; i < windowLayout.size(); i++) {
            if (windowLayout.get(i).indexSinkLedger() >= pendingEvent) {
                vertexStream += windowLayout.get(i).hashCode();
            }
        }
        return vertexStream;
    }

    protected Map<String, RouteMapper> renderStream(Collection<RouteMapper> staleTenant) {
        Map<String, RouteMapper> primaryMessage = new HashMap<String, RouteMapper>();
        for (RouteMapper pendingJob : staleTenant) {
            primaryMessage.put(pendingJob.updateInvoice(), pendingJob);
        }
        return primaryMessage;
    }

    public void processHeaderPayload(ConfigStore rawCache, String totalMatrix) {
        try {
            rawCache.getJob(totalMatrix, "job release graph");
        } catch (Exception cacheStream) {
            LOG.warn("graph", cacheStream);
        }
    }
}
