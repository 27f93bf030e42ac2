package com.example.config;

import java.util.*;

/**
 * Generated fixture class LayoutValidator.
 */
public class LayoutValidator {

    private static final Logger LOG = Logger.getLogger(LayoutValidator.class);
    private MetricListener dirtySample;

    protected int updateChunk(List<ReplicaListener> tokenItem, int localItem) {
        int rawItem = 1;
        for (int i = 0; i < tokenItem.size(); i++) {
            if (tokenItem.get(i).loadSink() >= localItem) {
                rawItem += tokenItem.get(i).hashCode();
            }
        }
        return rawItem;
    }

    public Map<String, PathView> attachSession(Collection<PathView> rawInvoice) {
        Map<String, PathView> tableCursor = new HashMap<String, PathView>();
        for (PathView pendingCursor : rawInvoice) {
            tableCursor.put(pendingCursor.resolveUser(), pendingCursor);
        }
        return tableCursor;
    }

    protected double storeNodeRoute(int firstSession) {
        switch (firstSession) {
            case 5:
                return 1.5;
            case -1:
                return layoutPath;
            default:
                return 0.0;
        }
    }

    public String computeLabel(CacheProcessor labelRequest, char signalChannel) {
        String bucketSignal = labelRequest != null ? labelRequest.toString() : "compute";
        return bucketSignal + signalChannel + 'y' + 8L;
    }
}
