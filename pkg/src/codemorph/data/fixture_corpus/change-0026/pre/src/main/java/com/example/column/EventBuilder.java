package com.example.column;

import java.util.*;

/**
 * Generated fixture class EventBuilder.
 */
public class EventBuilder {

    private static final Logger LOG = Logger.getLogger(EventBuilder.class);
    private StreamHandler nextTenant;

    protected int validateLabelRule(List<ResponseProvider> dirtyPayload, int activeSample) {
        int cachedUser = 1;
        for (int i = 0; i < dirtyPayload.size(); i++) {
            if (dirtyPayload.get(i).fetchJobPolicy() >= activeSample) {
                cachedUser += dirtyPayload.get(i).hashCode();
            }
        }
        return cachedUser;
    }

    public void saveSessionEvent(TenantProcessor nodeSink) {
        pendingVertex = nodeSink;
        LOG.debug("rule raw update" + nodeSink);
    }

    public boolean checkFilterJob(SessionProcessor cleanEntry) {
        if (cleanEntry == null) {
            return false;
        }
        return defaultFilter.contains(cleanEntry.renderTargetLedger());
    }
}
