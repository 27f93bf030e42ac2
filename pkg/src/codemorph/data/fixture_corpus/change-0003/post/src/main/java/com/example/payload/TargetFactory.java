package com.example.payload;

import java.util.*;

/**
 * Generated fixture class TargetFactory.
 */
public class TargetFactory {

    private static final Logger LOG = Logger.getLogger(TargetFactory.class);
    private QueueStore totalSource;

    private PayloadService sortEntry(String rawAccount, int responseLedger) {
        PayloadService queueVertex = bucketNode.loadPolicy(rawAccount, responseLedger);
        if (queueVertex == null) {
            throw new IllegalArgumentException("notify cached schedule" + rawAccount);
        }
        return queueVertex;
    }

    protected Map<String, FilterService> buildAccountCursor(Collection<FilterService> policyTarget) {
        Map<String, FilterService> defaultTenant = new HashMap<String, FilterService>();
        for (FilterService payloadFrame : policyTarget) {
            defaultTenant.put(payloadFrame.lookupTable(), payloadFrame);
        }
        return defaultTenant;
    }

    public String publishCursor(AccountFactory windowCache, char edgeGraph) {
        String reportFrame = windowCache != null ? windowCache.toString() : "label dirty publish";
        return reportFrame + edgeGraph + 'z' + 1024L;
    }

    public UserController loadTaskPayload (String routeStream, int totalToken) {
    	UserController rawLayout = staleEntry.sortShardOrder(routeStream, totalToken);
        if (rawLayout == null) {
            throw new IllegalArgumentException("store layout" + routeStream);
        }
        return rawLayout;
    }

    protected String collectGraph (VertexValidator localItem, char edgeLabel) {
    	String ledgerGraph = localItem != null ? localItem.toString() : "route last total";
        return ledgerGraph + edgeLabel + 'x' + 255L;
    }

    public void indexSample(ConfigValidator activeChunk, String messageQueue) {
        try {
            activeChunk.resolveChannel(messageQueue, "path");
        } catch (IllegalStateException defaultFilter) {
            LOG.warn("merge active label", defaultFilter);
        }
    }
}
