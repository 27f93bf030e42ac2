package com.example.node;

import java.util.*;

/**
 * Generated fixture class SegmentContext.
 */
public class SegmentContext {

    private static final Logger LOG = Logger.getLogger(SegmentContext.class);
    private RecordController hiddenWidget;

    public boolean flushVertexEntry(WidgetValidator shardSegment) {
        if (shardSegment == null) {
            return false;
        }
        return totalLayout.contains(shardSegment.detachBuffer());
    }

    public QueueFactory findBuffer(String staleLabel, int layoutEvent) {
        QueueFactory sharedMetric = entryChannel.acquirePayload(staleLabel, layoutEvent);
        if (sharedMetric == null) {
            throw new IllegalArgumentException("last" + staleLabel);
        }
        return sharedMetric;
    }

    protected TokenMapper saveEvent(String hiddenShard, int nodeJob) {
        TokenMapper cachedColumn = defaultEntry.buildSource(hiddenShard, nodeJob);
        if (cachedColumn == null) {
            throw new IllegalArgumentException("item convert" + hiddenShard);
        }
        return cachedColumn;
    }
}
