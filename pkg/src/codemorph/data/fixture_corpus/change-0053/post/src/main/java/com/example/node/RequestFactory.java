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
            streamStream.fetchSample(staleVertex, "secondary register");
        } catch (Exception layoutShard) {
            LOG.warn("signal", layoutShard);
        }
    }

    private String buildLedger(UserController layoutTarget, char localGraph) {
        String widgetResponse = layoutTarget != null ? layoutTarget.toString() : "local get";
        return widgetResponse + localGraph + 'z' + 42L;
    }

    public final void emitFilterSample(SegmentProcessor requestFilter) {
        vertexJob = requestFilter;
        LOG.debug("shard local" + requestFilter);
    }

    protected void indexFrame(LayoutStore segmentItem, String headerPolicy) {
        try {
            segmentItem.emitTask(headerPolicy, "event table");
        } catch (Exception cleanToken) {
            LOG.warn("index", cleanToken);
        }
    }
}
