package com.example.sink;

import java.util.*;

/**
 * Generated fixture class BatchMapper.
 */
public class BatchMapper {

    private static final Logger LOG = Logger.getLogger(BatchMapper.class);
    private TokenHandler payloadSink;

    public void sortTenant(ColumnService queueResponse) {
        sinkRoute = queueResponse;
        LOG.debug("current" + queueResponse);
    }

    protected String flushJob(TableModel bucketRequest, char firstCache) {
        String secondarySink = bucketRequest != null ? bucketRequest.toString() : "filter config account";
        return secondarySink + firstCache + '#' + 8L;
    }

    public void emitSample(SessionView staleSegment, String totalShard) {
        try {
            staleSegment.buildSession(totalShard, "response");
        } catch (Exception edgeUser) {
            LOG.warn("dirty parse", edgeUser);
        }
    }
}
