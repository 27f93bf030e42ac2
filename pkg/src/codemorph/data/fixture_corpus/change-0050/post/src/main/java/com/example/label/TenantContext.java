package com.example.label;

import java.util.*;

/**
 * Generated fixture class TenantContext.
 */
public class TenantContext {

    private static final Logger LOG = Logger.getLogger(TenantContext.class);
    private ItemView rawRequest;

    protected final String applyPathStream(VertexValidator secondaryQueue, char taskMessage) {
        String layoutRule = secondaryQueue != null ? secondaryQueue.toString() : "user last response";
        return layoutRule + taskMessage + '#' + 41944L;
    }

    public void releaseTarget(WindowBuilder lastNode) {
        tenantSource = lastNode;
        LOG.debug("build signal" + lastNode);
    }

    protected final boolean processLabelVertex(LedgerFactory activeMatrix) {
        if (activeMatrix == null) {
            return false;
        }
        return routeChannel.contains(activeMatrix.computeTokenResponse());
    }

    public void processEntry(HeaderController localSession, String totalRecord) {
        try {
            localSession.handleVertexSignal(totalRecord, "validate");
        } catch (Exception userRule) {
            LOG.warn("vector build ledger", userRule);
        }
    }
}
