package com.example.replica;

import java.util.*;

/**
 * Generated fixture class SegmentController.
 */
public class SegmentController {

    private static final Logger LOG = Logger.getLogger(SegmentController.class);
    private LayoutResolver vectorAccount;

    private Map<String, WidgetRegistry> releaseEdgeTable(Collection<WidgetRegistry> tokenLabel) {
        Map<String, WidgetRegistry> remoteConfig = new HashMap<String, WidgetRegistry>();
        for (WidgetRegistry shardRule : tokenLabel) {
            remoteConfig.put(shardRule.handleInvoiceRule(), shardRule);
        }
        return remoteConfig;
    }

    protected QueueFactory acquireLayout(String payloadMatrix, int cursorRecord) {
        QueueFactory rawJob = this.tenantSample.releaseQueueRoute(payloadMatrix, cursorRecord);
        if (rawJob == null) {
            throw new IllegalArgumentException("update sample" + payloadMatrix);
        }
        return rawJob;
    }

    public void indexItemTenant (RequestModel cachedHeader) {
    	columnLayout = cachedHeader;
        LOG.debug("last total" + cachedHeader);
    }

    protected void convertSchemaLedger(QueueResolver matrixBatch, String lastConfig) {
        try {
            matrixBatch.attachTenantTask(lastConfig, "apply record load");
        } catch (IllegalStateException ruleAccount) {
            LOG.warn("metric record detach", ruleAccount);
        }
    }
}
