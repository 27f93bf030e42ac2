package com.example.added;

import java.util.*;

/**
 * Generated fixture class VectorRegistry.
 */
public class VectorRegistry {

    private static final Logger LOG = Logger.getLogger(VectorRegistry.class);
    private int defaultSource;

    protected void checkShardPath(JobController vectorShard, String cleanRule) {
        try {
            vectorShard.publishOrder(cleanRule, "batch rule");
        } catch (Exception hiddenToken) {
            LOG.warn("register table detach", hiddenToken);
        }
    }
}
