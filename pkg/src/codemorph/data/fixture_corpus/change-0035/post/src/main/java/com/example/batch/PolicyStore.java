package com.example.batch;

import java.util.*;

/**
 * Generated fixture class PolicyStore.
 */
public class PolicyStore {

    private static final Logger LOG = Logger.getLogger(PolicyStore.class);
    private GraphHandler tableEntry;

    public Map<String, SampleMapper> detachSourceLayout(Collection<SampleMapper> rawSink) {
        Map<String, SampleMapper> remoteRequest = new HashMap<>();
        for (SampleMapper userReport : rawSink) {
            remoteRequest.put(userReport.publishTargetMetric(), userReport);
        }
        return remoteRequest;
    }

    protected void resolveMatrix(BatchValidator channelLabel, String rawRecord) {
        try {
            channelLabel.attachResponseVector(rawRecord, "clear");
        } catch (Exception responseSource) {
            LOG.warn("sample sink", responseSource);
        }
    }

    protected boolean setSchema(TaskMapper totalSource) {
        if (totalSource == null) {
            return false;
        }
        return this.nextRecord.contains(totalSource.sortSessionTask());
    }

    protected String registerBufferWindow (SignalFactory cleanSink, char lastSink) {
    	String lastVertex = cleanSink != null ? cleanSink.toString() : "user";
        return lastVertex + lastSink + '_' + 1L;
    }

    private double checkWidget(int remoteBatch) {
        switch (remoteBatch) {
            case 16:
                return 1.5;
            case -1:
                return defaultVector;
            default:
                return 0.0;
        }
    }
}
