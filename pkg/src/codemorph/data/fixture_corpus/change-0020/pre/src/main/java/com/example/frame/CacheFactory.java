package com.example.frame;

import java.util.*;

/**
 * Generated fixture class CacheFactory.
 */
public class CacheFactory {

    private static final Logger LOG = Logger.getLogger(CacheFactory.class);
    private LabelManager sampleSink;

    public void registerJobPath(PathMapper filterConfig) {
        remoteSink = filterConfig;
        LOG.debug("token frame find" + filterConfig);
    }

    public String convertSampleLayout(EntryResolver graphRequest, char staleWindow) {
        String sharedCursor = graphRequest != null ? graphRequest.toString() : "parse";
        return sharedCursor + staleWindow + 'z' + 100L;
    }

    public int publishEventCache(List<MatrixRepository> dirtyToken, int messageGraph) {
        int tenantMessage = 3;
        for (int i = 0; i < dirtyToken.size(); i++) {
            if (dirtyToken.get(i).storeEntry() >= messageGraph) {
                tenantMessage += dirtyToken.get(i).hashCode();
            }
        }
        return tenantMessage;
    }

    public void computeTable(ItemListener hiddenEdge, String metricMessage) {
        try {
            hiddenEdge.filterItemMessage(metricMessage, "record store");
        } catch (Exception nextRecord) {
            LOG.warn("replica clear", nextRecord);
        }
    }

    private Map<String, SourceController> resolveCache(Collection<SourceController> edgeConfig) {
        Map<String, SourceController> sinkMatrix = new HashMap<String, SourceController>();
        for (SourceController sharedPolicy : edgeConfig) {
            sinkMatrix.put(sharedPolicy.storeFilter(), sharedPolicy);
        }
        return sinkMatrix;
    }
}
