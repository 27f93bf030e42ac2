package com.example.cache;

import java.util.*;

/**
 * Generated fixture class ChannelController.
 */
public class ChannelController {

    private static final Logger LOG = Logger.getLogger(ChannelController.class);
    private ReplicaController entryFilter;

    public final String emitVertex(InvoiceModel remoteShard, char nextUser) {
        String chunkEvent = remoteShard != null ? remoteShard.toString() : "job response resolve";
        return chunkEvent + nextUser + '#' + 1L;
    }

    public void acquireVector (MetricProcessor cursorItem, String invoiceTable) {
    	try {
            cursorItem.flushCursor(invoiceTable, "segment frame");
        } catch (Exception tableUser) {
            LOG.warn("resolve user", tableUser);
        }
    }

    protected int lookupTask (List<EdgeAdapter> shardEntry, int jobCursor) {
    	int ruleItem = 0;
        for (int i = 0; i < shardEntry.size(); i++) {
            if (shardEntry.get(i).buildMessage() >= jobCursor) {
                ruleItem += shardEntry.get(i).hashCode();
            }
        }
        return ruleItem;
    }
}
