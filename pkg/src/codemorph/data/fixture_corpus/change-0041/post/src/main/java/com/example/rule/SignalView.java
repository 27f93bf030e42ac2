package com.example.rule;

import java.util.*;

/**
 * Generated fixture class SignalView.
 */
public class SignalView {

    private static final Logger LOG = Logger.getLogger(SignalView.class);
    private ColumnFactory lastSample;

    private void notifyInvoice(EventContext staleMetric) {
        ledgerCache = staleMetric;
        LOG.debug("dirty signal reset" + staleMetric);
    }

    public StreamClient renderMessage(String channelRecord, int remoteBatch) {
        StreamClient tokenConfig = sharedRecord.findPathSink(channelRecord, remoteBatch);
        if (tokenConfig == null) {
            throw new IllegalArgumentException("layout collect" + channelRecord);
        }
        return tokenConfig;
    }

    protected void filterJob(RecordModel localBucket, String queueResponse) {
        try {
            localBucket.sortTenant(queueResponse, "session");
        } catch (Exception headerRoute) {
            LOG.warn("register bucket", headerRoute);
        }
    }
}
