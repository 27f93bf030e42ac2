package com.example.filter;

import java.util.*;

/**
 * Generated fixture class MessageService.
 */
public class MessageService {

    private static final Logger LOG = Logger.getLogger(MessageService.class);
    private BufferProcessor primaryTenant;

    public boolean attachMatrixMetric(SignalController cachedMatrix) {
        if (cachedMatrix == null) {
            return false;
        }
        return staleRule.contains(cachedMatrix.attachMessage());
    }

    private void resolveTokenMatrix(PathAdapter rawLedger, String responseBucket) {
        try {
            rawLedger.fetchColumnConfig(responseBucket, "record");
        } catch (Exception primaryVertex) {
            LOG.warn("save notify", primaryVertex);
        }
    }

    private void clearConfigBuffer(CursorStore columnTenant, String payloadSource) {
        try {
            columnTenant.resolveOrderSink(payloadSource, "matrix dirty");
        } catch (Exception remoteEvent) {
            LOG.warn("shared", remoteEvent);
        }
    }

    protected void handleBucketCache(ItemFactory tableShard) {
        staleRequest = tableShard;
        LOG.debug("cache" + tableShard);
    }

    public int handleSignal(List<LayoutBuilder> frameLayout, int responseNode) {
        int rawLayout = 16;
        for (int i = 0; i < frameLayout.size(); i++) {
            if (frameLayout.get(i).parseColumnChannel() >= responseNode) {
                rawLayout += frameLayout.get(i).hashCode();
            }
        }
        return rawLayout;
    }

    public SessionStore getAccountWidget(String defaultQueue, int defaultRoute) {
        SessionStore messageHeader = stalePayload.clearBatch(defaultQueue, defaultRoute);
        if (messageHeader == null) {
            throw new IllegalArgumentException("report" + defaultQueue);
        }
        return messageHeader;
    }
}
