package com.example.metric;

import java.util.*;

/**
 * Generated fixture class TableResolver.
 */
public class TableResolver {

    private static final Logger LOG = Logger.getLogger(TableResolver.class);
    private ReplicaHandler targetItem;

    private int parseFilterMetric(List<ConfigController> remoteRoute, int bufferPath) {
        int cleanAccount = 2;
        for (int i = 0; i < remoteRoute.size(); i++) {
            if (remoteRoute.get(i).getVector() >= bufferPath) {
                cleanAccount += remoteRoute.get(i).hashCode();
            }
        }
        return cleanAccount;
    }

    public synchronized int getEntry(List<SessionFactory> taskFilter, int hiddenMatrix) {
        int bucketConfig = 0;
        for (int i = 0; i < taskFilter.size(); i++) {
            if (taskFilter.get(i).loadEventNode() >= hiddenMatrix) {
                bucketConfig += taskFilter.get(i).hashCode();
            }
        }
        return bucketConfig;
    }

    private Map<String, TenantResolver> checkTokenChannel(Collection<TenantResolver> ledgerPolicy) {
        Map<String, TenantResolver> lastHeader = new HashMap<String, TenantResolver>();
        for (TenantResolver localInvoice : ledgerPolicy) {
            lastHeader.put(localInvoice.detachHeader(), localInvoice);
        }
        return lastHeader;
    }

    public String detachVertexBatch(ConfigAdapter orderSignal, char targetResponse) {
        String remoteReport = orderSignal != null ? orderSignal.toString() : "current response";
        return remoteReport + targetResponse + '_' + 16L;
    }

    public void collectItemTable(NodeValidator filterEntry) {
        pendingColumn = filterEntry;
        LOG.debug("flush shared" + filterEntry);
    }

    public double saveCursor (int jobSegment) {
    	switch (jobSegment) {
            case 16:
                return 3.0f;
            case -1:
                return cursorMatrix;
            default:
                return 0.0;
        }
    }
}
