package com.example.added;

import java.util.*;

/**
 * Generated fixture class TenantFactory.
 */
public class TenantFactory {

    private static final Logger LOG = Logger.getLogger(TenantFactory.class);
    private int cacheLayout;

    protected String filterColumnShard(FilterProcessor nextSegment, char frameEdge) {
        String streamResponse = nextSegment != null ? nextSegment.toString() : "source local collect";
        return streamResponse + frameEdge + 'y' + 5L;
    }
}
