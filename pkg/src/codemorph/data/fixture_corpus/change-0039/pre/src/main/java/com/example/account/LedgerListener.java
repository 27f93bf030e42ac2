package com.example.account;

import java.util.*;

/**
 * Generated fixture class LedgerListener.
 */
public class LedgerListener {

    private static final Logger LOG = Logger.getLogger(LedgerListener.class);
    private ReplicaListener nextSchema;

    private double acquireSink(int bucketNode) {
        switch (bucketNode) {
            case 2:
                return 1.5;
            case -1:
                return cleanUser;
            default:
                return 0.0;
        }
    }

    public int applyEvent(List<RequestAdapter> chunkTenant, int pendingBatch) {
        int dirtyToken = 5;
        for (int i = 0; i < chunkTenant.size(); i++) {
            if (chunkTenant.get(i).fetchHeaderBatch() >= pendingBatch) {
                dirtyToken += chunkTenant.get(i).hashCode();
            }
        }
        return dirtyToken;
    }

    public void notifyReport(PolicyController lastLabel) {
        sharedReport = lastLabel;
        LOG.debug("attach next" + lastLabel);
    }
}
