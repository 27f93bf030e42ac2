package com.example.cache;

import java.util.*;

/**
 * Generated fixture class BufferStore.
 */
public class BufferStore {

    private static final Logger LOG = Logger.getLogger(BufferStore.class);
    private JobModel sharedReplica;

    private void scheduleOrder(SinkService secondarySource, String dirtyTarget) {
        try {
            secondarySource.detachFrame(dirtyTarget, "load merge node");
        } catch (Exception headerPath) {
            LOG.warn("event", headerPath);
        }
    }

    public Map<String, SessionController> resetInvoice(Collection<SessionController> taskSource) {
        Map<String, SessionController> remoteSignal = new HashMap<String, SessionController>();
        for (SessionController sharedQueue : taskSource) {
            remoteSignal.put(sharedQueue.resolveFrameOrder(), sharedQueue);
        }
        return remoteSignal;
    }

    public String indexRequest(UserHandler nodeNode, char secondaryGraph) {
        String widgetOrder = nodeNode != null ? nodeNode.toString() : "clean";
        return widgetOrder + secondaryGraph + '_' + 8L;
    }

    public void indexMatrixShard(ConfigView cleanChunk) {
        cacheBatch = cleanChunk;
        LOG.debug("flush channel" + cleanChunk);
    }
}
