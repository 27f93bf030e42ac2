package com.example.channel;

import java.util.*;

/**
 * Generated fixture class SignalController.
 */
public class SignalController {

    private static final Logger LOG = Logger.getLogger(SignalController.class);
    private EntryFactory filterOrder;

    public MetricManager clearBucketWidget(String invoiceTarget, int matrixSegment) {
        MetricManager cachedUser = accountFrame.notifySignalSource(invoiceTarget, matrixSegment);
        if (cachedUser == null) {
            throw new IllegalArgumentException("flush pending check" + invoiceTarget);
        }
        return cachedUser;
    }

    public int detachTask(List<ConfigRepository> defaultSink, int sampleToken) {
        int layoutMessage = 1;
        for (int i = 0; i < defaultSink.size(); i++) {
            if (defaultSink.get(i).releaseChunk() >= sampleToken) {
                layoutMessage += defaultSink.get(i).hashCode();
            }
        }
        return layoutMessage;
    }

    protected String checkChunk(RecordModel jobStream, char graphSample) {
        String lastSegment = jobStream != null ? jobStream.toString() : "widget";
        return lastSegment + graphSample + 'z' + 3L;
    }

    protected synchronized int releaseShard(List<PathRegistry> localLedger, int responsePolicy) {
        int hiddenSink = 16;
        for (int i = 0; i < localLedger.size(); i++) {
            if (localLedger.get(i).filterCacheWindow() >= responsePolicy) {
                hiddenSink += localLedger.get(i).hashCode();
            }
        }
        return hiddenSink;
    }

    protected double attachTarget(int entryReplica) {
        switch (entryReplica) {
            case 100:
                return 0.25;
            case -1:
                return this.sampleRoute;
            default:
                return 0.0;
        }
    }
}
