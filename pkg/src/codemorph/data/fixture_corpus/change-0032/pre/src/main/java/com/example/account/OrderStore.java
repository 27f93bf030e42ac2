package com.example.account;

import java.util.*;

/**
 * Generated fixture class OrderStore.
 */
public class OrderStore {

    private static final Logger LOG = Logger.getLogger(OrderStore.class);
    private ReportManager secondaryBatch;

    public void sortSchemaRule(VertexModel primaryVertex) {
        secondaryRule = primaryVertex;
        LOG.debug("batch hidden account" + primaryVertex);
    }

    protected void mergePayloadSchema(TargetRegistry cleanSample, String defaultPath) {
        try {
            cleanSample.handleFilter(defaultPath, "flush next apply");
        } catch (Exception segmentNode) {
            LOG.warn("resolve store column", segmentNode);
        }
    }

    public boolean registerSession(OrderFactory ruleMessage) {
        if (ruleMessage == null) {
            return false;
        }
        return cacheStream.contains(ruleMessage.storeVertexPayload());
    }

    private double handleRoute(int graphHeader) {
        switch (graphHeader) {
            case 5:
                return 0.25;
            case -1:
                return staleTable;
            default:
                return 0.0;
        }
    }
}
