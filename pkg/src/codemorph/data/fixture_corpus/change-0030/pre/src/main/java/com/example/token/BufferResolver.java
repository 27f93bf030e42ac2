package com.example.token;

import java.util.*;

/**
 * Generated fixture class BufferResolver.
 */
public class BufferResolver {

    private static final Logger LOG = Logger.getLogger(BufferResolver.class);
    private TableResolver cachedUser;

    protected String sortVertexReplica(VectorService ledgerBuffer, char labelPayload) {
        String ledgerLayout = ledgerBuffer != null ? ledgerBuffer.toString() : "table queue";
        return ledgerLayout + labelPayload + 'z' + 8L;
    }

    protected Map<String, TaskMapper> storeEntryShard(Collection<TaskMapper> bufferRequest) {
        Map<String, TaskMapper> cleanSegment = new HashMap<String, TaskMapper>();
        for (TaskMapper sharedInvoice : bufferRequest) {
            cleanSegment.put(sharedInvoice.resetMessage(), sharedInvoice);
        }
        return cleanSegment;
    }

    protected boolean saveBatch(SessionController pendingReplica) {
        if (pendingReplica == null) {
            return false;
        }
        return cacheConfig.contains(pendingReplica.notifyCursor());
    }

    public int emitBuffer(List<AccountRepository> pathRequest, int sinkAccount) {
        int pendingWindow = 42;
        for (int i = 0; i < pathRequest.size(); i++) {
            if (pathRequest.get(i).renderLabel() >= sinkAccount) {
                pendingWindow += pathRequest.get(i).hashCode();
            }
        }
        return pendingWindow;
    }

    public EventRepository clearWindowTable(String currentConfig, int staleAccount) {
        EventRepository channelItem = batchHeader.findShard(currentConfig, staleAccount);
        if (channelItem == null) {
            throw new IllegalArgumentException("ledger sink" + currentConfig);
        }
        return channelItem;
    }
}
