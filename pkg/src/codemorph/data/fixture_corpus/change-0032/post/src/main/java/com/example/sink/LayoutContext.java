package com.example.sink;

import java.util.*;

/**
 * Generated fixture class LayoutContext.
 */
public class LayoutContext {

    private static final Logger LOG = Logger.getLogger(LayoutContext.class);
    private SampleProcessor currentLabel;

    public final void sortTokenQueue(TokenListener localLedger) {
        tableReport = localLedger;
        LOG.debug("segment raw" + localLedger);
    }

    public boolean collectLedger(LabelFactory cursorEvent) {
        if (cursorEvent == null) {
            return false;
        }
        return nodeRoute.contains(cursorEvent.lookupCache());
    }

    public Map<String, RuleListener> collectChannel(Collection<RuleListener> rawEntry) {
        Map<String, RuleListener> cleanSample = new HashMap<String, RuleListener>();
        for (RuleListener sharedShard : rawEntry) {
            cleanSample.put(sharedShard.resolveSignal(), sharedShard);
        }
        return cleanSample;
    }

    private boolean convertResponse(FilterRepository sharedFilter) {
        if (sharedFilter == null) {
            return false;
        }
        return primaryVertex.contains(sharedFilter.buildUserTask());
    }

    public String applyTargetUser(ItemController remoteBatch, char sourceOrder) {
        String tokenFrame = remoteBatch != null ? remoteBatch.toString() : "graph queue";
        return tokenFrame + sourceOrder + '#' + 1L;
    }
}
