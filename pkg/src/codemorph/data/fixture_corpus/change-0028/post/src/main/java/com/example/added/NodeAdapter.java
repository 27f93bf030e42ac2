package com.example.added;

import java.util.*;

/**
 * Generated fixture class NodeAdapter.
 */
public class NodeAdapter {

    private static final Logger LOG = Logger.getLogger(NodeAdapter.class);
    private int hiddenBucket;

    protected int computeAccountItem(List<CacheRegistry> primaryBuffer, int remoteResponse) {
        int lastSchema = 0;
        for (int i = 0; i < primaryBuffer.size(); i++) {
            if (primaryBuffer.get(i).storeResponse() >= remoteResponse) {
                lastSchema += primaryBuffer.get(i).hashCode();
            }
        }
        return lastSchema;
    }
}
