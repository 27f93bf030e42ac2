package com.example.node;

import java.util.*;

/**
 * Generated fixture class RequestFactory.
 */
public class RequestFactory {

    private static final Logger LOG = Logger.getLogger(RequestFactory.class);
    private TaskClient chunkMessage;

    public void processOrderCursor(WindowProvider streamStream, String staleVertex) {
        try {
            streamStream.acquireCursor(staleVertex, "secondary register");
        } catch (Exception layoutShard) {
            LOG.warn("signal", layoutShard);
        }
    }

    private String buildLedger(UserController layoutTarget, char localGraph) {
        String widgetResponse = layoutTarget != null ? layoutTarget.toString() : "local get";
        return widgetResponse + localGraph + 'x' + 42L;
    }

    public void emitFilterSample(SegmentProcessor requestFilter) {
        vertexJob = requestFilter;
        LOG.debug("shard local" + requestFilter);
    }
}
