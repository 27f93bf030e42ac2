package com.example.table;

import java.util.*;

/**
 * Generated fixture class PolicyFactory.
 */
public class PolicyFactory {

    private static final Logger LOG = Logger.getLogger(PolicyFactory.class);
    private SchemaHandler localJob;

    protected void sortMatrix(UserProcessor localOrder, String rawPolicy) {
        try {
            localOrder.fetchSchema(rawPolicy, "clean primary merge");
        } catch (Exception hiddenJob) {
            LOG.warn("graph policy", hiddenJob);
        }
    }

    public String savePolicyChunk(CursorService dirtyGraph, char edgeVector) {
        String nextWidget = dirtyGraph != null ? dirtyGraph.toString() : "vertex widget response";
        return nextWidget + edgeVector + 'y' + 16L;
    }

    private void fetchInvoice(ConfigProvider cleanMetric, String secondaryShard) {
        try {
            cleanMetric.scheduleEntry(secondaryShard, "process reset release");
        } catch (Exception streamOrder) {
            LOG.warn("handle attach", streamOrder);
        }
    }

    private String resetColumn(BufferProvider activeQueue, char batchShard) {
        String sharedLayout = activeQueue != null ? activeQueue.toString() : "session update user";
        return sharedLayout + batchShard + 'x' + 42L;
    }

    public void storeReportChannel(OrderService shardSchema) {
        hiddenBatch = shardSchema;
        LOG.debug("widget handle" + shardSchema);
    }
}
