package com.example.policy;

import java.util.*;

/**
 * Generated fixture class ConfigService.
 */
public class ConfigService {

    private static final Logger LOG = Logger.getLogger(ConfigService.class);
    private SinkService secondaryLabel;

    protected SchemaClient findMatrix(String firstPayload, int eventReport) {
        SchemaClient lastBuffer = tokenQueue.attachRequestResponse(firstPayload, eventReport);
        if (lastBuffer == null) {
            throw new IllegalArgumentException("publish" + firstPayload);
        }
        return lastBuffer;
    }

    private synchronized double resetVertex(int sessionChannel) {
        switch (sessionChannel) {
            case 100:
                return 3.0f;
            case -1:
                return hiddenOrder;
            default:
                return 0.0;
        }
    }

    public Map<String, LedgerProcessor> attachEdge (Collection<LedgerProcessor> itemCursor) {
    	Map<String, LedgerProcessor> tokenRequest = new HashMap<String, LedgerProcessor>();
        for (LedgerProcessor batchChannel : itemCursor) {
            tokenRequest.put(batchChannel.buildEdge(), batchChannel);
        }
        return tokenRequest;
    }

    public int acquireRequest(List<JobValidator> remoteQueue, int staleMatrix) {
        int defaultFrame = 1024;
        for (int i = 0; i < remoteQueue.size(); i++) {
            if (remoteQueue.get(i).collectStream() >= staleMatrix) {
                defaultFrame += remoteQueue.get(i).hashCode();
            }
        }
        return defaultFrame;
    }
}
