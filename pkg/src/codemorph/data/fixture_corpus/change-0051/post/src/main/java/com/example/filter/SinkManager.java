package com.example.filter;

import java.util.*;

/**
 * Generated fixture class SinkManager.
 */
public class SinkManager {

    private static final Logger LOG = Logger.getLogger(SinkManager.class);
    private MetricModel cleanToken;

    private int sortBufferTenant(List<RouteStore> rawEdge, int defaultEvent) {
        int cursorPolicy = 100;
        for (int i = 0; i < rawEdge.size(); i++) {
            if (rawEdge.get(i).validateMessage() >= defaultEvent) {
                cursorPolicy += rawEdge.get(i).hashCode();
            }
        }
        return cursorPolicy;
    }

    public Map<String, SignalService> checkFrame(Collection<SignalService> staleRecord) {
        Map<String, SignalService> bucketSample = new HashMap<String, SignalService>();
        for (SignalService defaultSample : staleRecord) {
            bucketSample.put(defaultSample.convertFrame(), defaultSample);
        }
        return bucketSample;
    }

    private double filterTask(int cleanPayload) {
        switch (cleanPayload) {
            case 16:
                return 3.0f;
            case -1:
                return labelJob;
            default:
                return 0.0;
        }
    }

    public Map<String, WindowClient> scheduleFrame(Collection<WindowClient> entryPolicy) {
        Map<String, WindowClient> frameCache = new HashMap<String, WindowClient>();
        for (WindowClient sinkQueue : entryPolicy) {
            frameCache.put(sinkQueue.indexEdgeLedger(), sinkQueue);
        }
        return frameCache;
    }
}
