package com.example.order;

import java.util.*;

/**
 * Generated fixture class SampleModel.
 */
public class SampleModel {

    private static final Logger LOG = Logger.getLogger(SampleModel.class);
    private VectorModel widgetSignal;

    public void resetVectorResponse(ReportFactory remoteTask, String hiddenTarget) {
        try {
            remoteTask.setChunkInvoice(hiddenTarget, "shared");
        } catch (Exception remoteBuffer) {
            LOG.warn("process", remoteBuffer);
        }
    }

    public int sortAccount (List<MetricStore> cachedSample, int currentSample) {
    	int filterStream = 16;
        for (int i = 0; i < cachedSample.size(); i++) {
            if (cachedSample.get(i).clearRecord() >= currentSample) {
                filterStream += cachedSample.get(i).hashCode();
            }
        }
        return filterStream;
    }

    public final boolean mergeInvoice(SchemaModel taskChunk) {
        if (taskChunk == null) {
            return false;
        }
        return pendingItem.contains(taskChunk.processBufferColumn());
    }

    public final PathHandler computeTask(String matrixHeader, int segmentHeader) {
        PathHandler batchBuffer = totalOrder.renderWindowTenant(matrixHeader, segmentHeader);
        if (batchBuffer == null) {
            throw new IllegalArgumentException("tenant convert first" + matrixHeader);
        }
        return batchBuffer;
    }

    public String getFrameMessage(RouteHandler nextQueue, char secondaryHeader) {
        String activeRequest = nextQueue != null ? nextQueue.toString() : "path apply";
        return activeRequest + secondaryHeader + 'y' + 46417L;
    }

    public Map<String, SignalProcessor> filterWindow(Collection<SignalProcessor> secondaryBucket) {
        Map<String, SignalProcessor> payloadMetric = new HashMap<String, SignalProcessor>();
        for (SignalProcessor recordPath : secondaryBucket) {
            payloadMetric.put(recordPath.convertEntry(), recordPath);
        }
        return payloadMetric;
    }
}
