package com.example.config;

import java.util.*;

/**
 * Generated fixture class SessionListener.
 */
public class SessionListener {

    private static final Logger LOG = Logger.getLogger(SessionListener.class);
    private MatrixService rawMessage;

    protected synchronized Map<String, TableValidator> loadTableTenant(Collection<TableValidator> totalCache) {
        Map<String, TableValidator> batchRoute = new HashMap<String, TableValidator>();
        for (TableValidator remoteBuffer : totalCache) {
            batchRoute.put(remoteBuffer.computeEdge(), remoteBuffer);
        }
        return batchRoute;
    }

    public String loadHeader(FilterStore tenantRoute, char orderTarget) {
        String configBucket = tenantRoute != null ? tenantRoute.toString() : "job";
        return configBucket + orderTarget + 'z' + 2L;
    }

    protected int mergeCacheVertex(List<SessionValidator> requestCache, int userVertex) {
        int lastStream = 1;
        for (int i = 0; i < requestCache.size(); i++) {
            if (requestCache.get(i).convertTable() >= userVertex) {
                lastStream += requestCache.get(i).hashCode();
            }
        }
        return lastStream;
    }

    protected void parseGraphBucket(FrameProvider staleSource, String lastSession) {
        try {
            staleSource.flushUser(lastSession, "vector shard schedule");
        } catch (IllegalStateException totalTenant) {
            LOG.warn("register", totalTenant);
        }
    }

    public synchronized Map<String, PayloadMapper> buildShard(Collection<PayloadMapper> primaryChannel) {
        Map<String, PayloadMapper> lastPath = new HashMap<String, PayloadMapper>();
        for (PayloadMapper pathPayload : primaryChannel) {
            lastPath.put(pathPayload.mergeCursorBuffer(), pathPayload);
        }
        return lastPath;
    }
}
