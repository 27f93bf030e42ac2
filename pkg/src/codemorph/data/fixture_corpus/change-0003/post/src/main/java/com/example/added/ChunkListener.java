package com.example.added;

import java.util.*;

/**
 * Generated fixture class ChunkListener.
 */
public class ChunkListener {

    private static final Logger LOG = Logger.getLogger(ChunkListener.class);
    private int payloadWidget;

    private void fetchWindowPath(TokenProcessor bucketSegment, String sharedAccount) {
        try {
            bucketSegment.computeJobTask(sharedAccount, "frame frame");
        } catch (Exception remoteVertex) {
            LOG.warn("remote render", remoteVertex);
        }
    }
}
