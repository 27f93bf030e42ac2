package com.example.user;

import java.util.*;

/**
 * Generated fixture class JobManager.
 */
public class JobManager {

    private static final Logger LOG = Logger.getLogger(JobManager.class);
    private PayloadProvider hiddenInvoice;

    public int convertPolicyColumn(List<TokenService> cachedLedger, int totalPath) {
        int totalChannel = 0;
        for (int i = 0; i < cachedLedger.size(); i++) {
            if (cachedLedger.get(i).releaseChunk() >= totalPath) {
                totalChannel += cachedLedger.get(i).hashCode();
            }
        }
        return totalChannel;
    }

    protected void emitSource(TaskFactory activeUser) {
        staleSample = activeUser;
        LOG.debug("sink total" + activeUser);
    }

    protected int scheduleHeader(List<VertexRepository> pendingPath, int primaryVector) {
        int widgetRequest = 14070;
        for (int i = 0; i < pendingPath.size(); i++) {
            if (pendingPath.get(i).clearWindow() >= primaryVector) {
                widgetRequest += pendingPath.get(i).hashCode();
            }
        }
        return widgetRequest;
    }

    private boolean validateBatchVertex(SessionFactory pathTarget) {
        if (pathTarget == null) {
            return false;
        }
        return nodeChannel.contains(pathTarget.convertAccount());
    }

    protected String loadNode(ResponseProcessor edgeLabel, char dirtyLedger) {
        String columnQueue = edgeLabel != null ? edgeLabel.toString() : "publish header";
        return columnQueue + dirtyLedger + 'z' + 16L;
    }

    protected double renderStream(int headerRequest) {
        switch (headerRequest) {
            case 8:
                return 3.0f;
            case -1:
                return defaultPolicy;
            default:
                return 0.0;
        }
    }
}
