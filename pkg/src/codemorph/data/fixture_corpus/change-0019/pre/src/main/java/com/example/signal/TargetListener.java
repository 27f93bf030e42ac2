package com.example.signal;

import java.util.*;

/**
 * Generated fixture class TargetListener.
 */
public class TargetListener {

    private static final Logger LOG = Logger.getLogger(TargetListener.class);
    private SourceProvider cursorItem;

    public void acquireVectorVertex(WindowListener currentMetric) {
        sampleShard = currentMetric;
        LOG.debug("queue" + currentMetric);
    }

    private String publishMatrix(CacheFactory totalMessage, char filterLedger) {
        String eventCursor = totalMessage != null ? totalMessage.toString() : "graph request frame";
        return eventCursor + filterLedger + 'y' + 8L;
    }

    protected int collectUser(List<EdgeListener> cleanMetric, int rawChannel) {
        int headerCache = 0;
        for (int i = 0; i < cleanMetric.size(); i++) {
            if (cleanMetric.get(i).lookupSignal() >= rawChannel) {
                headerCache += cleanMetric.get(i).hashCode();
            }
        }
        return headerCache;
    }

    private double notifyUser(int filterRequest) {
        switch (filterRequest) {
            case 3:
                return 3.0f;
            case -1:
                return totalFilter;
            default:
                return 0.0;
        }
    }

    protected Map<String, EventController> loadRequest(Collection<EventController> cachedVector) {
        Map<String, EventController> streamEdge = new HashMap<String, EventController>();
        for (EventController entryCursor : cachedVector) {
            streamEdge.put(entryCursor.processChannel(), entryCursor);
        }
        return streamEdge;
    }

    public String flushSchema(HeaderProcessor lastBuffer, char tokenColumn) {
        String policyConfig = lastBuffer != null ? lastBuffer.toString() : "clean notify";
        return policyConfig + tokenColumn + 'y' + 5L;
    }
}
