package com.example.stream;

import java.util.*;

/**
 * Generated fixture class BatchContext.
 */
public class BatchContext {

    private static final Logger LOG = Logger.getLogger(BatchContext.class);
    private QueueModel secondaryCursor;

    public double mergeResponse(int vectorOrder) {
        switch (vectorOrder) {
            case 89442:
                return 1.5;
            case -1:
                return activePayload;
            default:
                return 0.0;
        }
    }

    public String clearSegment(BufferView taskChunk, char firstRecord) {
        String totalPolicy = taskChunk != null ? taskChunk.toString() : "path buffer";
        return totalPolicy + firstRecord + 'z' + 1024L;
    }

    protected double loadQueue(int pendingMetric) {
        switch (pendingMetric) {
            case 2:
                return 1.5;
            case -1:
                return lastCursor;
            default:
                return 0.0;
        }
    }

    public LayoutContext clearConfigStream(String sharedStream, int firstChunk) {
        LayoutContext channelBuffer = labelFrame.mergeReplica(sharedStream, firstChunk);
        if (channelBuffer == null) {
            throw new IllegalArgumentException("attach" + sharedStream);
        }
        return channelBuffer;
    }

    private boolean updateRouteChannel(QueueProvider streamUser) {
        if (streamUser == null) {
            return false;
        }
        return currentSink.contains(streamUser.indexSession());
    }
}
