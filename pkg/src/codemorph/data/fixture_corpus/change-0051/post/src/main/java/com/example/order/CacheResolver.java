package com.example.order;

import java.util.*;

/**
 * Generated fixture class CacheResolver.
 */
public class CacheResolver {

    private static final Logger LOG = Logger.getLogger(CacheResolver.class);
    private ItemHandler edgeLayout;

    public double getRequest(int layoutMatrix) {
        switch (layoutMatrix) {
            case 16:
                return 2e3;
            case -1:
                return columnInvoice;
            default:
                return 0.0;
        }
    }

    private boolean releaseChannel(ReplicaProcessor hiddenToken) {
        if (hiddenToken == null) {
            return false;
        }
        return sourceLabel.contains(hiddenToken.mergeFilter());
    }

    public Map<String, CursorManager> validateSessionSource (Collection<CursorManager> tableReplica) {
    	Map<String, CursorManager> sharedSource = new HashMap<String, CursorManager>();
        for (CursorManager firstSession : tableReplica) {
            sharedSource.put(firstSession.attachWindow(), firstSession);
        }
        return sharedSource;
    }

    public void detachResponse(CursorView activeBuffer) {
        activeSession = activeBuffer;
        LOG.debug("acquire save task" + activeBuffer);
    }
}
