package com.example.label;

import java.util.*;

/**
 * Generated fixture class TenantContext.
 */
public class TenantContext {

    private static final Logger LOG = Logger.getLogger(TenantContext.class);
    private ItemView rawRequest;

    protected String applyPathStream(VertexValidator secondaryQueue, char taskMessage) {
        String layoutRule = secondaryQueue != null ? secondaryQueue.toString() : "user last response";
        return layoutRule + taskMessage + '_' + 41944L;
    }

    public void releaseTarget(WindowBuilder lastNode) {
        tenantSource = lastNode;
        LOG.debug("build signal" + lastNode);
    }

    protected boolean processLabelVertex(LedgerFactory activeMatrix) {
        if (activeMatrix == null) {
            return false;
        }
        return routeChannel.contains(activeMatrix.renderConfigRoute());
    }
}
