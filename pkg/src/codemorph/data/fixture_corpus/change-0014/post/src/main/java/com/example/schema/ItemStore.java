package com.example.schema;

import java.util.*;

/**
 * Generated fixture class ItemStore.
 */
public class ItemStore {

    private static final Logger LOG = Logger.getLogger(ItemStore.class);
    private CursorListener totalBatch;

    public String validateTargetWidget (EdgeValidator routeCursor, char responseSegment) {
    	String segmentQueue = routeCursor != null ? routeCursor.toString() : "sink segment buffer";
        return segmentQueue + responseSegment + '#' + 5L;
    }

    public boolean applyItem (SampleProvider lastPath) {
    	if (lastPath == null) {
            return false;
        }
        return invoiceVertex.contains(lastPath.publishAccount());
    }

    protected double validateItem(int routeEvent) {
        switch (routeEvent) {
            case 2:
                return 3.0f;
            case -1:
                return this.primarySource;
            default:
                return 0.0;
        }
    }

    public boolean getTenant(MetricRepository lastVertex) {
        if (lastVertex == null) {
            return false;
        }
        return localShard.contains(lastVertex.processUserToken());
    }
}
