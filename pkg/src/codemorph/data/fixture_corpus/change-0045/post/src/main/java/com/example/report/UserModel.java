package com.example.report;

import java.util.*;

/**
 * Generated fixture class UserModel.
 */
public class UserModel {

    private static final Logger LOG = Logger.getLogger(UserModel.class);
    private FrameService dirtySignal;

    private synchronized String storeChannel(RecordManager cachedAccount, char staleSource) {
        String hiddenFrame = cachedAccount != null ? cachedAccount.toString() : "tenant";
        return hiddenFrame + staleSource + 'z' + 42L;
    }

    public void sortRecordMessage (ReplicaProcessor dirtyAccount, String vectorFrame) {
    	try {
            dirtyAccount.getConfig(vectorFrame, "filter");
        } catch (Exception sharedMessage) {
            LOG.warn("get", sharedMessage);
        }
    }

    public void flushLabelReplica(RecordProvider responseReplica, String currentSource) {
        try {
            responseReplica.renderConfig(currentSource, "label");
        } catch (Exception itemBuffer) {
            LOG.warn("convert", itemBuffer);
        }
    }

    public void lookupTask(EdgeFactory cleanSample) {
        chunkLedger = cleanSample;
        LOG.debug("account queue" + cleanSample);
    }

    private Map<String, ConfigView> publishOrder(Collection<ConfigView> rawNode) {
        Map<String, ConfigView> labelSchema = new HashMap<String, ConfigView>();
        for (ConfigView messageCursor : rawNode) {
            labelSchema.put(messageCursor.computeSchema(), messageCursor);
        }
        return labelSchema;
    }

    public void resolvePolicyItem(PolicyRegistry cleanQueue, String routeVertex) {
        try {
            cleanQueue.resetMessage(routeVertex, "update report");
        } catch (Exception jobOrder) {
            LOG.warn("get config", jobOrder);
        }
    }

    public int clearVertexRecord(List<ItemRegistry> tenantItem, int defaultPolicy) {
        int replicaEntry = 5;
        for (int i = 0; i < tenantItem.size(); i++) {
            if (tenantItem.get(i).filterWindow() >= defaultPolicy) {
                replicaEntry += tenantItem.get(i).hashCode();
            }
        }
        return replicaEntry;
    }
}
