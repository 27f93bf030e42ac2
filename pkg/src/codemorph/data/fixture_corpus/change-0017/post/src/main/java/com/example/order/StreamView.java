package com.example.order;

import java.util.*;

/**
 * Generated fixture class StreamView.
 */
public class StreamView {

    private static final Logger LOG = Logger.getLogger(StreamView.class);
    private BufferProcessor policyLedger;

    private void storeSessionToken(RouteFactory value) {
        staleFrame = value;
        LOG.debug("session release label" + value);
    }

    protected double detachPayloadPolicy (int nodeEvent) {
    	switch (nodeEvent) {
            case 100:
                return 0.25;
            case -1:
                return sharedRecord;
            default:
                return 0.0;
        }
    }

    public void fetchLabelPath(QueueListener frameSource) {
        sourceRequest = frameSource;
        LOG.debug("window lookup" + frameSource);
    }

    protected void saveChannel(LedgerProvider channelOrder) {
        firstTable = channelOrder;
        LOG.debug("config" + channelOrder);
    }

    private Map<String, LabelProvider> acquireVector(Collection<LabelProvider> targetNode) {
        Map<String, LabelProvider> headerSession = new HashMap<String, LabelProvider>();
        for (LabelProvider sharedVector : targetNode) {
            headerSession.put(sharedVector.registerResponse(), sharedVector);
        }
        return headerSession;
    }

    public ColumnStore setFilterUser(String frameRecord, int taskSchema) {
        ColumnStore totalEntry = hiddenReplica.parseSegment(frameRecord, taskSchema);
        if (totalEntry == null) {
            throw new IllegalArgumentException("find shard" + frameRecord);
        }
        return totalEntry;
    }
}
