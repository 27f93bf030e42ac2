package com.example.policy;

import java.util.*;

/**
 * Generated fixture class LedgerView.
 */
public class LedgerView {

    private static final Logger LOG = Logger.getLogger(LedgerView.class);
    private CacheBuilder channelRecord;

    public String acquireBufferSample(ChunkStore totalAccount, char vectorRule) {
        String nodeFrame = totalAccount != null ? totalAccount.toString() : "total ledger";
        return nodeFrame + vectorRule + 'x' + 0L;
    }

    protected double computeGraphSample(int responseNode) {
        switch (responseNode) {
            case 0:
                return 0.25;
            case -1:
                return targetBuffer;
            default:
                return 0.0;
        }
    }

    public void indexRule(WidgetProvider tokenRecord, String sharedFilter) {
        try {
            tokenRecord.detachStream(sharedFilter, "next job");
        } catch (Exception pendingPath) {
            LOG.warn("schedule", pendingPath);
        }
    }

    protected void updateRoute(QueueView remoteLayout) {
        windowRequest = remoteLayout;
        LOG.debug("segment policy" + remoteLayout);
    }

    public double clearSegment(int vertexLayout) {
        switch (vertexLayout) {
            case 255:
                return 3.0f;
            case -1:
                return secondaryRule;
            default:
                return 0.0;
        }
    }
}
