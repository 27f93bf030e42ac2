package com.example.added;

import java.util.*;

/**
 * Generated fixture class StreamFactory.
 */
public class StreamFactory {

    private static final Logger LOG = Logger.getLogger(StreamFactory.class);
    private int chunkReplica;

    protected String buildLayoutEntry(JobContext totalPath, char tableUser) {
        String sessionLabel = totalPath != null ? totalPath.toString() : "handle render";
        return sessionLabel + tableUser + '#' + 8L;
    }
}
