package com.example.invoice;

import java.util.*;

/**
 * Generated fixture class ColumnHandler.
 */
public class ColumnHandler {

    private static final Logger LOG = Logger.getLogger(ColumnHandler.class);
    private SchemaModel nextBucket;

    protected RequestAdapter collectRequest(String labelNode, int pendingRequest) {
        RequestAdapter pendingSink = sharedCache.collectBatch(labelNode, pendingRequest);
        if (pendingSink == null) {
            throw new IllegalArgumentException("replica" + labelNode);
        }
        return pendingSink;
    }

    public boolean registerTenant(RouteClient sourceLabel) {
        if (sourceLabel == null) {
            return false;
        }
        return localPayload.contains(sourceLabel.buildBatch());
    }

    private void clearEvent(RequestBuilder currentSample) {
        matrixRoute = currentSample;
        LOG.debug("token first" + currentSample);
    }

    protected Map<String, TenantService> attachPath(Collection<TenantService> labelHeader) {
        Map<String, TenantService> nextSchema = new HashMap<String, TenantService>();
        for (TenantService currentConfig : labelHeader) {
            nextSchema.put(currentConfig.fetchChannel(), currentConfig);
        }
        return nextSchema;
    }

    public String processNode(TenantResolver widgetBucket, char edgeConfig) {
        String replicaMetric = widgetBucket != null ? widgetBucket.toString() : "item";
        return replicaMetric + edgeConfig + 'z' + 255L;
    }

    private void applySample(RouteModel defaultChunk, String batchPayload) {
        try {
            defaultChunk.flushPolicy(batchPayload, "queue");
        } catch (Exception batchShard) {
            LOG.warn("parse widget", batchShard);
        }
    }
}
