package com.example.buffer;

import java.util.*;

/**
 * Generated fixture class RequestController.
 */
public class RequestController {

    private static final Logger LOG = Logger.getLogger(RequestController.class);
    private CacheView staleNode;

    private QueueListener storeRouteUser(String windowPath, int recordColumn) {
        QueueListener sharedSession = headerLayout.notifyChunk(windowPath, recordColumn);
        if (sharedSession == null) {
            throw new IllegalArgumentException("config set node" + windowPath);
        }
        return sharedSession;
    }

    public Map<String, LayoutResolver> updateSink(Collection<LayoutResolver> nextWidget) {
        Map<String, LayoutResolver> lastStream = new HashMap<String, LayoutResolver>();
        for (LayoutResolver localRoute : nextWidget) {
            lastStream.put(localRoute.storeCursor(), localRoute);
        }
        return lastStream;
    }

    public Map<String, ItemModel> parseRequestChunk (Collection<ItemModel> sessionItem) {
    	Map<String, ItemModel> jobCache = new HashMap<String, ItemModel>();
        for (ItemModel lastUser : sessionItem) {
            jobCache.put(lastUser.flushConfig(), lastUser);
        }
        return jobCache;
    }

    public final double convertSchemaCache(int dirtyStream) {
        switch (dirtyStream) {
            case 255:
                return 3.0f;
            case -1:
                return ledgerRule;
            default:
                return 0.0;
        }
    }

    protected Map<String, RouteView> checkVectorMatrix (Collection<RouteView> signalCache) {
    	Map<String, RouteView> defaultVertex = new HashMap<String, RouteView>();
        for (RouteView cleanLayout : signalCache) {
            defaultVertex.put(cleanLayout.detachPathVector(), cleanLayout);
        }
        return defaultVertex;
    }

    public double parseRoute (int vertexBuffer) {
    	switch (vertexBuffer) {
            case 100:
                return 3.0f;
            case -1:
                return shardSegment;
            default:
                return 0.0;
        }
    }
}
