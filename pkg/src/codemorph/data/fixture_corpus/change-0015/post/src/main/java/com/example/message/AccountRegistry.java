package com.example.message;

import java.util.*;

/**
 * Generated fixture class AccountRegistry.
 */
public class AccountRegistry {

    private static final Logger LOG = Logger.getLogger(AccountRegistry.class);
    private GraphContext defaultWidget;

    public boolean releaseCursorNode(LayoutController staleBucket) {
        if (staleBucket == null) {
            return false;
        }
        return cacheSegment.contains(staleBucket.updateFrame());
    }

    protected void loadSchemaFrame(BufferHandler defaultOrder, String shardBatch) {
        try {
            defaultOrder.handleBatchWindow(shardBatch, "check");
        } catch (Exception activeQueue) {
            LOG.warn("user hidden sink", activeQueue);
        }
    }

    public double publishJob(int itemConfig) {
        switch (itemConfig) {
            case 2:
                return 0.25;
            case -1:
                return firstSample;
            default:
                return 0.0;
        }
    }
}
