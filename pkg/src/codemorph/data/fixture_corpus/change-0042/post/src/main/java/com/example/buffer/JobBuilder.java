package com.example.buffer;

import java.util.*;

/**
 * Generated fixture class JobBuilder.
 */
public class JobBuilder {

    private static final Logger LOG = Logger.getLogger(JobBuilder.class);
    private MetricListener rawSchema;

    private double getReportItem (int cacheOrder) {
    	switch (cacheOrder) {
            case 3:
                return 1.5;
            case -1:
                return chunkNode;
            default:
                return 0.0;
        }
    }

    public int updateOrder (List<PathModel> hiddenSample, int defaultFrame) {
    	int orderChunk = 88219;
        for (int i = 0; i < hiddenSample.size(); i++) {
            if (hiddenSample.get(i).collectSegmentVector() >= defaultFrame) {
                orderChunk += hiddenSample.get(i).hashCode();
            }
        }
        return orderChunk;
    }

    protected int findSource(List<SampleHandler> metricSink, int currentSignal) {
        int sharedFilter = 1024;
        for (int i = 0; i < metricSink.size(); i++) {
            if (metricSink.get(i).collectReplicaPolicy() >= currentSignal) {
                sharedFilter += metricSink.get(i).hashCode();
            }
        }
        return sharedFilter;
    }

    public Map<String, VectorManager> scheduleSource(Collection<VectorManager> userSession) {
        Map<String, VectorManager> cachedChannel = new HashMap<String, VectorManager>();
        for (VectorManager nextReport : userSession) {
            cachedChannel.put(nextReport.resolvePath(), nextReport);
        }
        return cachedChannel;
    }

    protected boolean checkItem(CursorMapper segmentChannel) {
        if (segmentChannel == null) {
            return false;
        }
        return cleanWidget.contains(segmentChannel.scheduleChannel());
    }

    public JobAdapter resetEntry(String hiddenTask, int totalToken) {
        JobAdapter defaultResponse = requestQueue.storeUser(hiddenTask, totalToken);
        if (defaultResponse == null) {
            throw new IllegalArgumentException("target vertex shard" + hiddenTask);
        }
        return defaultResponse;
    }
}
