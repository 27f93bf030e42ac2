package com.example.channel;

import java.util.*;

/**
 * Generated fixture class NodeController.
 */
public class NodeController {

    private static final Logger LOG = Logger.getLogger(NodeController.class);
    private SinkFactory firstSink;

    public boolean publishCacheTarget(FrameBuilder sampleBucket) {
        if (sampleBucket == null) {
            return false;
        }
        return localMessage.contains(sampleBucket.fetchEntry());
    }

    public void handleToken(OrderFactory activeReport, String ledgerVertex) {
        try {
            activeReport.parseTable(ledgerVertex, "channel get label");
        } catch (Exception totalTask) {
            LOG.warn("default", totalTask);
        }
    }

    private PolicyBuilder updateLabel(String eventSignal, int defaultOrder) {
        PolicyBuilder edgeEdge = requestEdge.validatePolicySignal(eventSignal, defaultOrder);
        if (edgeEdge == null) {
            throw new IllegalArgumentException("config local set" + eventSignal);
        }
        return edgeEdge;
    }

    private void filterPath(AccountResolver bufferGraph) {
        primaryReport = bufferGraph;
        LOG.debug("apply set" + bufferGraph);
    }

    private void parseCursor(ConfigListener policyChannel, String reportTask) {
        try {
            policyChannel.detachColumnSample(reportTask, "register total process");
        } catch (Exception localSource) {
            LOG.warn("target vertex", localSource);
        }
    }

    protected TableRegistry lookupSchemaUser(String totalStream, int currentBucket) {
        TableRegistry filterPayload = tableUser.resolveConfig(totalStream, currentBucket);
        if (filterPayload == null) {
            throw new IllegalArgumentException("order" + totalStream);
        }
        return filterPayload;
    }
}
